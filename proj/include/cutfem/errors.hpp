#pragma once

#include <stdexcept>
#include <string>

namespace cutfem {

enum class ErrCode {
    AxisSingularity,    // torus gradient / closest point undefined on the symmetry axis
    MedialAxis,         // closest point ambiguous (two minimizers at equal distance)
    NonCubicBox,        // background box cells are not cubes
    EmptyActiveMesh,    // no background tet carries a cut facet
    DegenerateSegment,  // polyline segment below length tolerance
    DegenerateFacet,    // collinear triangle / zero-length segment
    ZeroGradient,       // nodal level set gradient vanishes on a tet
    DofMismatch,        // facet parent tet is not part of the active mesh
    NonPositiveError,   // EOC requested for a non-positive error value
};

class Error : public std::runtime_error {
public:
    Error(ErrCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrCode code() const { return code_; }

private:
    ErrCode code_;
};

[[noreturn]] inline void raise(ErrCode code, const std::string& what) { throw Error(code, what); }

}  // namespace cutfem
