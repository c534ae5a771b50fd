#include "raising/pair_set.hpp"

#include <stdexcept>

namespace raising {

bool is_valid_pair_set(const PairSet& d) {
  for (auto [i, j] : d) {
    if (i < 1 || j <= i) return false;
    for (int a = 1; a <= i; ++a)
      for (int b = a + 1; b <= j; ++b)
        if (!d.count({a, b})) return false;
  }
  return true;
}

PairSet cset(const Partition& lambda, int k) {
  PairSet out;
  int l = lambda.length();
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j)
      if (lambda.row(i) + lambda.row(j) > 2 * k + j - i) out.insert({i, j});
  return out;
}

PairSet outside_rim(const PairSet& c, int bound) {
  if (!is_valid_pair_set(c)) throw std::invalid_argument("outside_rim needs a valid set of pairs");
  PairSet out;
  for (int i = 1; i <= bound; ++i)
    for (int j = i + 1; j <= bound; ++j) {
      if (c.count({i, j})) continue;
      if (i == 1 || c.count({i - 1, j - 1})) out.insert({i, j});
    }
  return out;
}

PairSet parse_pair_set(std::string_view text) {
  PairSet out;
  std::string s(text);
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (!tok.empty()) {
      int i = 0, j = 0;
      size_t dash = tok.find('-');
      try {
        if (dash != std::string::npos) {
          i = std::stoi(tok.substr(0, dash));
          j = std::stoi(tok.substr(dash + 1));
        } else if (tok.size() == 2 && isdigit(tok[0]) && isdigit(tok[1])) {
          i = tok[0] - '0';
          j = tok[1] - '0';
        } else {
          throw std::invalid_argument("");
        }
      } catch (const std::exception&) {
        throw std::invalid_argument("bad pair literal '" + tok + "'");
      }
      if (i < 1 || j <= i) throw std::invalid_argument("pair (" + tok + ") needs 1 <= i < j");
      out.insert({i, j});
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_pair_set(const PairSet& d) {
  std::string out;
  for (auto [i, j] : d) {
    if (!out.empty()) out += ",";
    if (i < 10 && j < 10)
      out += std::to_string(i) + std::to_string(j);
    else
      out += std::to_string(i) + "-" + std::to_string(j);
  }
  return out;
}

}  // namespace raising
