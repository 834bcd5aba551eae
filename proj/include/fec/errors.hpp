#pragma once

#include <stdexcept>
#include <string>

namespace fec {

// Base class for all toolkit errors. CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// code_spec
class OctalOverflow : public Error { public: using Error::Error; };
class DegenerateCode : public Error { public: using Error::Error; };
class TooFewGenerators : public Error { public: using Error::Error; };
class UnsupportedK : public Error { public: using Error::Error; };
class BothZero : public Error { public: using Error::Error; };

// trellis
class StateSpaceTooLarge : public Error { public: using Error::Error; };

// encoder
class EmptyMessage : public Error { public: using Error::Error; };

// decoders
class LengthNotMultipleOfN : public Error { public: using Error::Error; };
class BlockTooShort : public Error { public: using Error::Error; };
class WindowTooSmall : public Error { public: using Error::Error; };
class UnterminatedBlock : public Error { public: using Error::Error; };

// rate adaptation
class LengthMismatch : public Error { public: using Error::Error; };
class LengthNotMultipleOfBlock : public Error { public: using Error::Error; };

// channel
class InvalidProbability : public Error { public: using Error::Error; };

// analysis
class CatastrophicCode : public Error { public: using Error::Error; };
class SearchSpaceTooLarge : public Error { public: using Error::Error; };

}  // namespace fec
