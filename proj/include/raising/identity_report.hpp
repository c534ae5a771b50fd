#pragma once

#include <string>

#include "raising/ring_element.hpp"

namespace raising {

// Outcome of checking lhs == rhs for one instance of an identity. Both sides
// are stored in the basis where they were compared.
struct IdentityReport {
  std::string identity;
  bool holds = false;
  RingElement lhs;
  RingElement rhs;
  std::string detail;
};

inline IdentityReport make_report(std::string identity, RingElement lhs, RingElement rhs, std::string detail = {}) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.holds = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.detail = std::move(detail);
  return r;
}

}  // namespace raising
