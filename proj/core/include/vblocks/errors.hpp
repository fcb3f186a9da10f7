#pragma once

#include <stdexcept>
#include <string>

namespace vblocks {

/// Input shapes disagree (ragged vectors, wrong relation length, ...).
class DimensionMismatchError : public std::invalid_argument {
public:
    explicit DimensionMismatchError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Two q-series with different cutoffs were combined.
class CutoffMismatchError : public std::invalid_argument {
public:
    explicit CutoffMismatchError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// A mode computation produced a nonzero vector outside the truncation window.
class TruncationOverflowError : public std::runtime_error {
public:
    explicit TruncationOverflowError(const std::string& what)
        : std::runtime_error(what) {}
};

/// A Laurent jet was asked about data below its admissible order or beyond
/// its tail marker.
class OrderViolationError : public std::invalid_argument {
public:
    explicit OrderViolationError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// A rank query (g, insertions) violating 2g - 2 + n > 0 after vacuum routing.
class UnstableQueryError : public std::invalid_argument {
public:
    explicit UnstableQueryError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Bad catalog parameters or an ill-formed fusion-ring document.
class InvalidCatalogError : public std::invalid_argument {
public:
    explicit InvalidCatalogError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// A fusion ring failed the consistency validator.
class FusionValidationError : public InvalidCatalogError {
public:
    explicit FusionValidationError(const std::string& what) : InvalidCatalogError(what) {}
};

/// The jet-prescription linear system has no solution.  On genus 0 with a
/// nonempty pole set this indicates an ansatz bound bug, not user error.
class InfeasibleSystemError : public std::runtime_error {
public:
    explicit InfeasibleSystemError(const std::string& what)
        : std::runtime_error(what) {}
};

/// Coinvariant estimator called with fewer than three marked points.
class InsufficientPointsError : public std::invalid_argument {
public:
    explicit InsufficientPointsError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// A section has a pole away from the declared marked points.
class StrayPoleError : public std::invalid_argument {
public:
    explicit StrayPoleError(const std::string& what)
        : std::invalid_argument(what) {}
};

} // namespace vblocks
