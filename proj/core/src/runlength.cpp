#include "stabset/runlength.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabset::monoid {

RunLengthPair rle_decode(std::string_view v) {
  if (v.empty()) throw std::invalid_argument("empty word");
  RunLengthPair out;
  std::size_t i = 0;
  while (i < v.size()) {
    char c = v[i];
    std::size_t j = i;
    while (j < v.size() && v[j] == c) ++j;
    out.shape += c;
    if (j < v.size())
      out.lengths.push_back(static_cast<int>(j - i));
    else
      out.pending = static_cast<int>(j - i);
    i = j;
  }
  return out;
}

std::string psi_apply(std::string_view shape, const std::vector<int>& lengths) {
  if (lengths.size() > shape.size()) throw std::invalid_argument("shape too short");
  std::string out;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] <= 0) throw std::invalid_argument("run lengths must be positive");
    out.append(static_cast<std::size_t>(lengths[i]), shape[i]);
  }
  return out;
}

std::string kolakoski(std::size_t len) {
  if (len == 0) throw std::invalid_argument("length must be positive");
  std::string k = "22";
  std::size_t run = 1;  // run 0 is the seed itself
  while (k.size() < len) {
    char letter = (run % 2 == 0) ? '2' : '1';
    int count = k[run] - '0';
    k.append(static_cast<std::size_t>(count), letter);
    ++run;
  }
  k.resize(len);
  return k;
}

SmoothReport smooth_check(std::string_view w, const std::string& sigma, int depth) {
  SmoothReport rep;
  int max_digit = 0;
  for (char c : sigma) {
    if (c < '1' || c > '9') throw std::invalid_argument("alphabet must be positive digits");
    max_digit = std::max(max_digit, c - '0');
  }
  std::string cur(w);
  for (int d = 1; d <= depth; ++d) {
    if (cur.empty()) break;
    RunLengthPair pair = rle_decode(cur);
    std::string next;
    for (std::size_t i = 0; i < pair.lengths.size(); ++i) {
      int len = pair.lengths[i];
      if (len > 9 || sigma.find(static_cast<char>('0' + len)) == std::string::npos) {
        rep.pass = false;
        rep.failed_depth = d;
        rep.failed_position = i + 1;
        return rep;
      }
      next += static_cast<char>('0' + len);
    }
    // The final run is cut by the prefix end, but a lower bound above the
    // largest letter already disqualifies it.
    if (pair.pending > max_digit) {
      rep.pass = false;
      rep.failed_depth = d;
      rep.failed_position = pair.lengths.size() + 1;
      return rep;
    }
    rep.achieved_depth = d;
    cur = std::move(next);
  }
  return rep;
}

}  // namespace stabset::monoid
