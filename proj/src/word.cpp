#include "perim/word.hpp"

#include <algorithm>

#include "perim/error.hpp"

namespace perim {

  Word inverse(Word const& w) {
    Word result(w.rbegin(), w.rend());
    for (auto& x : result) {
      x = inverse(x);
    }
    return result;
  }

  Word free_reduce(Word const& w) {
    Word stack;
    stack.reserve(w.size());
    for (Letter x : w) {
      if (!stack.empty() && stack.back() == inverse(x)) {
        stack.pop_back();
      } else {
        stack.push_back(x);
      }
    }
    return stack;
  }

  Word cyclic_reduce(Word const& w) {
    Word        r = free_reduce(w);
    std::size_t i = 0, j = r.size();
    while (j - i >= 2 && r[i] == inverse(r[j - 1])) {
      ++i;
      --j;
    }
    return Word(r.begin() + i, r.begin() + j);
  }

  bool is_freely_reduced(Word const& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i + 1] == inverse(w[i])) {
        return false;
      }
    }
    return true;
  }

  bool is_cyclically_reduced(Word const& w) {
    return is_freely_reduced(w)
           && (w.size() < 2 || w.front() != inverse(w.back()));
  }

  Word rotate(Word const& w, std::size_t k) {
    if (w.empty()) {
      return w;
    }
    k %= w.size();
    Word result(w.begin() + k, w.end());
    result.insert(result.end(), w.begin(), w.begin() + k);
    return result;
  }

  std::size_t cyclic_period(Word const& w) {
    std::size_t const n = w.size();
    for (std::size_t p = 1; p <= n; ++p) {
      if (n % p != 0) {
        continue;
      }
      bool ok = true;
      for (std::size_t i = 0; i + p < n && ok; ++i) {
        ok = w[i] == w[i + p];
      }
      if (ok) {
        return p;
      }
    }
    return 0;
  }

  PeriodExponent period_exponent(Word const& w) {
    if (w.empty()) {
      throw PreconditionError("period_exponent: empty word");
    }
    std::size_t const p = cyclic_period(w);
    return {Word(w.begin(), w.begin() + p), static_cast<int>(w.size() / p)};
  }

  bool cyclically_conjugate(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return false;
    }
    if (u.empty()) {
      return true;
    }
    auto occurs_as_rotation = [&u](Word const& x) {
      Word doubled = x;
      doubled.insert(doubled.end(), x.begin(), x.end());
      return std::search(doubled.begin(), doubled.end(), u.begin(), u.end())
             != doubled.end();
    };
    return occurs_as_rotation(v) || occurs_as_rotation(inverse(v));
  }

  Word power(Word const& w, int exponent) {
    Word const base = exponent < 0 ? inverse(w) : w;
    Word       result;
    int const  n = exponent < 0 ? -exponent : exponent;
    result.reserve(base.size() * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      result.insert(result.end(), base.begin(), base.end());
    }
    return result;
  }

}  // namespace perim
