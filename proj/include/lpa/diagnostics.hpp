#pragma once

#include <string>
#include <vector>

namespace lpa {

/// Check results assembled by the verification suites. One line per check:
/// "<name>: PASS" or "<name>: FAIL witness=<...>".
struct Diagnostics {
  struct Item {
    std::string check;
    bool ok = true;
    std::string witness;  // empty when ok
  };

  std::vector<Item> items;

  void pass(std::string check) { items.push_back({std::move(check), true, ""}); }
  void fail(std::string check, std::string witness) {
    items.push_back({std::move(check), false, std::move(witness)});
  }
  void record(std::string check, bool ok, std::string witness = "") {
    if (ok)
      pass(std::move(check));
    else
      fail(std::move(check), std::move(witness));
  }

  bool passed() const {
    for (const auto& it : items)
      if (!it.ok) return false;
    return true;
  }

  std::string to_text() const {
    std::string out;
    for (const auto& it : items) {
      out += it.check;
      out += it.ok ? ": PASS" : ": FAIL witness=" + it.witness;
      out += '\n';
    }
    return out;
  }
};

}  // namespace lpa
