#ifndef QPSURF_DIAGNOSTICS_HPP
#define QPSURF_DIAGNOSTICS_HPP

#include <string>
#include <vector>

namespace qpsurf {

/// Result of a diagnostic check: ok, or the list of violations found.
struct Diagnostics {
  bool ok = true;
  std::vector<std::string> messages;

  void fail(std::string message) {
    ok = false;
    messages.push_back(std::move(message));
  }
};

}  // namespace qpsurf

#endif  // QPSURF_DIAGNOSTICS_HPP
