#include "areagrowth/error.hpp"

namespace areagrowth {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::NonPositiveArea: return "NonPositiveArea";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::InsufficientRows: return "InsufficientRows";
    case ErrorKind::UncertifiedPacket: return "UncertifiedPacket";
  }
  return "Unknown";
}

}  // namespace areagrowth
