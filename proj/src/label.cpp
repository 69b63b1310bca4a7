// label.cpp -- isogeny-class label codec ("g.q.s1_s2_..._sg", signed base 26).

#include "relh/weil.hpp"

#include <stdexcept>

namespace relh {

namespace {

std::string enc26(i64 n) {
  // nonnegative base-26, digits a..z, most significant first
  if (n == 0) return "a";
  std::string s;
  while (n > 0) {
    s += char('a' + (int)(n % 26));
    n /= 26;
  }
  return {s.rbegin(), s.rend()};
}

i64 dec26(const std::string& s, size_t b, size_t e) {
  i64 n = 0;
  for (size_t i = b; i < e; ++i) {
    if (s[i] < 'a' || s[i] > 'z') throw std::runtime_error("label: bad digit");
    n = n * 26 + (s[i] - 'a');
  }
  return n;
}

}  // namespace

std::string label_encode(const IsogClass& c) {
  std::string out = std::to_string(c.g) + "." + std::to_string(c.q) + ".";
  for (int i = 0; i < c.g; ++i) {
    if (i) out += "_";
    i64 n = c.a[i];
    if (n < 0) out += "a" + enc26(-n);
    else out += enc26(n);
  }
  return out;
}

IsogClass label_parse(const std::string& label) {
  size_t d1 = label.find('.');
  size_t d2 = label.find('.', d1 + 1);
  if (d1 == std::string::npos || d2 == std::string::npos)
    throw std::runtime_error("label: expected g.q.coeffs");
  IsogClass c;
  c.g = std::stoi(label.substr(0, d1));
  c.q = std::stoi(label.substr(d1 + 1, d2 - d1 - 1));
  size_t pos = d2 + 1;
  while (pos <= label.size()) {
    size_t us = label.find('_', pos);
    size_t end = us == std::string::npos ? label.size() : us;
    if (end == pos) throw std::runtime_error("label: empty coefficient");
    if (end - pos > 1 && label[pos] == 'a') {
      c.a.push_back(-dec26(label, pos + 1, end));
    } else {
      c.a.push_back(dec26(label, pos, end));
    }
    if (us == std::string::npos) break;
    pos = us + 1;
  }
  if ((int)c.a.size() != c.g) throw std::runtime_error("label: coefficient count != g");
  return c;
}

}  // namespace relh
