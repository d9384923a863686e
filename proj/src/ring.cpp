#include "lpa/ring.hpp"

namespace lpa {

Ring Ring::parse(const std::string& s) {
  if (s == "Z") return Z();
  if (s.rfind("Zmod:", 0) == 0) {
    const std::string num = s.substr(5);
    try {
      std::size_t pos = 0;
      long long n = std::stoll(num, &pos);
      if (pos != num.size()) throw std::exception();
      return Zmod(n);
    } catch (const Error&) {
      throw;
    } catch (...) {
      throw Error("invalid ring spec '" + s + "'");
    }
  }
  throw Error("invalid ring spec '" + s + "' (expected Z or Zmod:<n>)");
}

std::string Ring::str() const {
  if (kind == Kind::Integers) return "Z";
  return "Zmod:" + std::to_string(mod);
}

}  // namespace lpa
