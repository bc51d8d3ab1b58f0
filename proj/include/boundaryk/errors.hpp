#pragma once

#include <stdexcept>
#include <string>

namespace boundaryk {

// Base class for every named error that can surface in a report or map to
// an exit code. name() is the stable identifier used in serialized refusal
// records; what() carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct NotPrime : Error {
    explicit NotPrime(unsigned long long p)
        : Error("NotPrime", "modulus " + std::to_string(p) + " is not prime") {}
};

struct MissingFace : Error {
    explicit MissingFace(const std::string& detail) : Error("MissingFace", detail) {}
};

struct NonIncreasingVertices : Error {
    explicit NonIncreasingVertices(const std::string& detail)
        : Error("NonIncreasingVertices", detail) {}
};

struct DimensionTooHigh : Error {
    explicit DimensionTooHigh(int dim)
        : Error("DimensionTooHigh",
                "complex dimension " + std::to_string(dim) + " exceeds the supported maximum 3") {}
};

struct DuplicateSimplex : Error {
    explicit DuplicateSimplex(const std::string& detail) : Error("DuplicateSimplex", detail) {}
};

// Boundary matrices that do not compose to zero.
struct BoundarySquare : Error {
    explicit BoundarySquare(int degree)
        : Error("BoundarySquare",
                "boundary_" + std::to_string(degree) + " * boundary_" + std::to_string(degree + 1) +
                    " is nonzero") {}
};

struct DegenerationNotCertified : Error {
    explicit DegenerationNotCertified(const std::string& detail)
        : Error("DegenerationNotCertified", detail) {}
};

struct ExtensionUnresolved : Error {
    explicit ExtensionUnresolved(const std::string& detail)
        : Error("ExtensionUnresolved", detail) {}
};

struct IntegralTorsionUnsupported : Error {
    explicit IntegralTorsionUnsupported(const std::string& h1)
        : Error("IntegralTorsionUnsupported",
                "integral mode requires torsion-free H1; got H1 = " + h1 +
                    "; use field coefficients instead") {}
};

struct MixedModes : Error {
    MixedModes() : Error("MixedModes", "corpus mixes invariants of different coefficient modes") {}
};

struct SchemaError : Error {
    SchemaError(std::string path, const std::string& detail)
        : Error("SchemaError", path + ": " + detail), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace boundaryk
