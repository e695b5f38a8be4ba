#pragma once

#include <stdexcept>
#include <string>

namespace polysmooth {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// -- mesh layer ------------------------------------------------------------

class ParseError : public Error {
public:
    using Error::Error;
};

class TopologyError : public Error {
public:
    using Error::Error;
};

class GeometryError : public Error {
public:
    using Error::Error;
};

class IOError : public Error {
public:
    using Error::Error;
};

class BoundaryVertexError : public TopologyError {
public:
    using TopologyError::TopologyError;
};

class NonManifoldStarError : public TopologyError {
public:
    using TopologyError::TopologyError;
};

// -- spherical kernel -------------------------------------------------------

class NotSimpleError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class NotHemisphericalError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class DegenerateAngleError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class PointOnBoundaryError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

// -- per-vertex analysis ----------------------------------------------------

class ZeroCurvatureError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class ClassificationMismatchError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class StraightAngleError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class AntipodalNormalsError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class NonGenericDirectionError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

// -- sections and asymptotics ------------------------------------------------

class PlaneThroughApexError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class WrongCurvatureSignError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class EmptyKernelError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

// -- face analysis ------------------------------------------------------------

class BoundaryFaceError : public TopologyError {
public:
    using TopologyError::TopologyError;
};

class MixedSignsError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class WrongSignError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class NotDecomposableError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

// -- projective layer ----------------------------------------------------------

class PointAtInfinityError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class DegenerateImageError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class NoHemisphereError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class CenterOnFacePlaneError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class EmptyInteriorError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

// -- fixtures ------------------------------------------------------------------

class BadParametersError : public Error {
public:
    using Error::Error;
};

}  // namespace polysmooth
