#pragma once

#include <stdexcept>
#include <string>

namespace bkm {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Clustering state errors.
class EmptyClusterError : public Error { public: using Error::Error; };
class BadLabelError : public Error { public: using Error::Error; };
class WouldEmptyClusterError : public Error { public: using Error::Error; };
class SameClusterError : public Error { public: using Error::Error; };
class StaleGainError : public Error { public: using Error::Error; };
class ConfigError : public Error { public: using Error::Error; };

// Bisecting errors.
class TooSmallError : public Error { public: using Error::Error; };
class InsufficientDataError : public Error { public: using Error::Error; };

// I/O errors.
class DimMismatchError : public Error { public: using Error::Error; };
class TruncatedError : public Error { public: using Error::Error; };
class EmptyFileError : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };
class MissingLabelsError : public Error { public: using Error::Error; };

// Product quantization errors.
class BadSubdivError : public Error { public: using Error::Error; };

}  // namespace bkm
