#include "permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace geu {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  if (word_.empty()) fail(errc::empty_word, "permutation word is empty");
  const int n = static_cast<int>(word_.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : word_) {
    if (v < 1 || v > n)
      fail(errc::value_out_of_range,
           "value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (seen[v]) fail(errc::duplicate_value, "value " + std::to_string(v) + " repeats");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(unchecked_t{}, std::move(w));
}

Permutation unchecked_permutation(std::vector<int> word) {
  return Permutation(Permutation::unchecked_t{}, std::move(word));
}

int ascent_count(const Permutation& p) {
  const auto& w = p.word();
  int c = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) ++c;
  return c;
}

int weak_excedance_count(const Permutation& p) {
  const auto& w = p.word();
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] >= static_cast<int>(i) + 1) ++c;
  return c;
}

long long major_index(const Permutation& p) {
  const auto& w = p.word();
  long long s = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) s += static_cast<long long>(i) + 1;
  return s;
}

int q_position(const Permutation& p) {
  const auto& w = p.word();
  const int n = p.size();
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == n) return static_cast<int>(i) + 1;
  fail(errc::internal, "value n missing from permutation");
}

CycleForm standard_cycle_form(const Permutation& p) {
  const int n = p.size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  CycleForm form;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    int v = start;
    do {
      seen[v] = 1;
      cycle.push_back(v);
      v = p.at(v);
    } while (v != start);
    // rotate so the largest element leads
    auto mx = std::max_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), mx, cycle.end());
    form.cycles.push_back(std::move(cycle));
  }
  std::sort(form.cycles.begin(), form.cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return form;
}

Permutation fundamental_map(const Permutation& p) {
  CycleForm form = standard_cycle_form(p);
  std::vector<int> out;
  out.reserve(p.size());
  for (const auto& cycle : form.cycles) out.insert(out.end(), cycle.begin(), cycle.end());
  return unchecked_permutation(std::move(out));
}

Permutation fundamental_inverse(const Permutation& p) {
  const auto& w = p.word();
  const int n = p.size();
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  int seg_start = 0;
  int max_so_far = 0;
  auto close_segment = [&](int seg_end) {
    // w[seg_start..seg_end] is one cycle c1 c2 ... cm: c1->c2->...->cm->c1
    for (int i = seg_start; i < seg_end; ++i) out[w[i] - 1] = w[i + 1];
    out[w[seg_end] - 1] = w[seg_start];
  };
  for (int i = 0; i < n; ++i) {
    if (w[i] > max_so_far) {
      if (i > 0) close_segment(i - 1);
      seg_start = i;
      max_so_far = w[i];
    }
  }
  close_segment(n - 1);
  return unchecked_permutation(std::move(out));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int v : p.word()) out.push_back(n + 1 - v);
  return unchecked_permutation(std::move(out));
}

std::string to_string(const std::vector<int>& word) {
  const int mx = word.empty() ? 0 : *std::max_element(word.begin(), word.end());
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (mx > 9 && i > 0) s += ' ';
    s += std::to_string(word[i]);
  }
  return s;
}

std::string to_string(const Permutation& p) { return to_string(p.word()); }

std::string to_string(const CycleForm& form) {
  int mx = 0;
  for (const auto& c : form.cycles)
    for (int v : c) mx = std::max(mx, v);
  std::string s;
  for (const auto& c : form.cycles) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (mx > 9 && i > 0) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  const bool separated = text.find_first_of(", \t") != std::string::npos;
  if (separated) {
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
      std::istringstream fields(item);
      std::string tok;
      while (fields >> tok) {
        try {
          out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          fail(errc::invalid_argument, "cannot parse '" + tok + "' as a value");
        }
      }
    }
  } else {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        fail(errc::invalid_argument, std::string("cannot parse '") + ch + "' as a value");
      out.push_back(ch - '0');
    }
  }
  return out;
}

PermutationEnumerator::PermutationEnumerator(int n, int cap) {
  if (n < 1) fail(errc::invalid_argument, "enumeration needs n >= 1");
  if (n > cap)
    fail(errc::cap_exceeded, "n=" + std::to_string(n) + " exceeds enumeration cap " +
                                 std::to_string(cap));
  cur_.resize(static_cast<std::size_t>(n));
  std::iota(cur_.begin(), cur_.end(), 1);
}

bool PermutationEnumerator::next(Permutation& out) {
  if (done_) return false;
  if (!first_ && !std::next_permutation(cur_.begin(), cur_.end())) {
    done_ = true;
    return false;
  }
  first_ = false;
  out.word_ = cur_;
  return true;
}

}  // namespace geu
