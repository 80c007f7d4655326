#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cousin/errors.hpp"
#include "cousin/linalg.hpp"
#include "cousin/root_datum.hpp"

namespace cousin {

// The Weyl group of a root datum, fully enumerated.
//
// Elements are integer handles (0 = identity) ordered by (length, word), where
// each element carries its canonical word: the lexicographically least among
// its reduced words, written as generator indices.  A word [i1,...,ik] denotes
// the composition s_{i1} o ... o s_{ik} acting on the weight space.
//
// Since rho pairs to 1 with every simple coroot, elements are keyed uniquely
// by their image of rho.
class WeylGroup {
 public:
  explicit WeylGroup(const RootDatum& datum) : datum_(&datum) {
    const int dim = datum.dim;
    const int m = datum.rank();
    std::vector<Mat> gen_mats;
    gen_mats.reserve(m);
    for (int i = 0; i < m; ++i) {
      Mat s = identity_matrix(dim);
      // column action: s(v) = v - <v, alpha_i^vee> alpha_i
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
          s[r][c] -= datum.simple_roots[i][r] * datum.simple_coroots[i][c];
      gen_mats.push_back(std::move(s));
    }

    const long long bound = enumeration_bound(1000000);
    action_.push_back(identity_matrix(dim));
    word_.push_back({});
    length_.push_back(0);
    index_by_rho_[datum.rho] = 0;

    std::vector<int> layer{0};
    while (!layer.empty()) {
      std::vector<int> next_layer;
      for (int w : layer) {
        for (int i = 0; i < m; ++i) {
          Mat prod = mat_mul(action_[w], gen_mats[i]);
          Vec key = mat_vec(prod, datum.rho);
          auto [it, inserted] =
              index_by_rho_.try_emplace(key, static_cast<int>(action_.size()));
          if (inserted) {
            std::vector<int> word = word_[w];
            word.push_back(i);
            action_.push_back(std::move(prod));
            word_.push_back(std::move(word));
            length_.push_back(length_[w] + 1);
            next_layer.push_back(it->second);
            if (static_cast<long long>(action_.size()) > bound)
              fail_resource("weyl", "enumerate",
                            "group exceeds enumeration bound; "
                            "input is probably not of finite type");
          }
        }
      }
      layer = std::move(next_layer);
    }

    const int n = size();
    right_.assign(n, std::vector<int>(m, -1));
    for (int w = 0; w < n; ++w)
      for (int i = 0; i < m; ++i)
        right_[w][i] = index_of(mat_mul(action_[w], gen_mats[i]));
    inverse_.assign(n, -1);
    for (int w = 0; w < n; ++w) {
      int inv = 0;
      const auto& word = word_[w];
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        inv = right_[inv][*it];
      inverse_[w] = inv;
    }
    longest_ = n - 1;
    if (length_[longest_] != static_cast<int>(datum.positive_roots.size()) ||
        multiply(longest_, longest_) != 0)
      fail_precondition("weyl", "enumerate", "no involutive longest element");
  }

  const RootDatum& datum() const { return *datum_; }
  int size() const { return static_cast<int>(action_.size()); }
  int identity() const { return 0; }
  int length(int w) const { return length_[w]; }
  const std::vector<int>& word(int w) const { return word_[w]; }
  int inverse(int w) const { return inverse_[w]; }
  int longest() const { return longest_; }

  int multiply(int a, int b) const {
    int out = a;
    for (int i : word_[b]) out = right_[out][i];
    return out;
  }
  int right_multiply(int w, int i) const { return right_[w][i]; }
  bool right_ascent(int w, int i) const { return length_[right_[w][i]] > length_[w]; }

  Vec apply(int w, const Vec& v) const { return mat_vec(action_[w], v); }
  Vec apply_inverse(int w, const Vec& v) const {
    return mat_vec(action_[inverse_[w]], v);
  }
  // Shifted ("dot") action: w . v = w(v + rho) - rho.
  Vec dot(int w, const Vec& v) const {
    return apply(w, v + datum_->rho) - datum_->rho;
  }

  std::string name(int w) const {
    if (length_[w] == 0) return "Id";
    std::string out;
    for (int i : word_[w]) out += "s" + std::to_string(i);
    return out;
  }

  // Accepts "Id", "id", "e", "1", or a concatenation like "s1s0s1".
  int parse(const std::string& text) const {
    if (text == "Id" || text == "id" || text == "e" || text == "1") return 0;
    if (text.empty() || text[0] != 's')
      fail_config("weyl", "parse", "bad element name '" + text + "'");
    int w = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (text[pos] != 's')
        fail_config("weyl", "parse", "bad element name '" + text + "'");
      std::size_t end = pos + 1;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])))
        ++end;
      if (end == pos + 1)
        fail_config("weyl", "parse", "bad element name '" + text + "'");
      int i = std::stoi(text.substr(pos + 1, end - pos - 1));
      if (i < 0 || i >= datum_->rank())
        fail_config("weyl", "parse",
                    "generator s" + std::to_string(i) + " out of range");
      w = right_[w][i];
      pos = end;
    }
    return w;
  }

  // Longest element of the parabolic subgroup generated by the Levi simples:
  // greedy ascent inside the parabolic from the identity.
  int longest_levi(const LeviDatum& levi) const {
    int w = 0;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int i : levi.theta) {
        if (right_ascent(w, i)) {
          w = right_[w][i];
          progress = true;
          break;
        }
      }
    }
    return w;
  }

  // Elements of the parabolic subgroup, in (length, word) order.
  std::vector<int> parabolic_elements(const LeviDatum& levi) const {
    std::vector<bool> seen(size(), false);
    seen[0] = true;
    std::vector<int> order{0};
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (int i : levi.theta) {
        int next = right_[order[head]][i];
        if (!seen[next]) {
          seen[next] = true;
          order.push_back(next);
        }
      }
    }
    std::sort(order.begin(), order.end());  // handle order is (length, word)
    return order;
  }

  // Minimal-length coset representatives for the parabolic: the elements
  // whose inverse keeps every Levi simple root positive.
  bool in_kostant(int w, const LeviDatum& levi) const {
    for (int i : levi.theta)
      if (!datum_->is_positive_root(apply_inverse(w, datum_->simple_roots[i])))
        return false;
    return true;
  }
  std::vector<int> kostant(const LeviDatum& levi) const {
    std::vector<int> out;
    for (int w = 0; w < size(); ++w)
      if (in_kostant(w, levi)) out.push_back(w);
    return out;  // handle order is already (length, word)
  }

  // Cohomological lengths of a Kostant representative: ell_plus is the Weyl
  // length, ell_minus its complement in the dimension of the flag fibre.
  int ell_plus(int w) const { return length_[w]; }
  int ell_minus(int w, const LeviDatum& levi) const { return levi.d - length_[w]; }

  // Bruhat order: u <= w iff some subsequence of the canonical word of w
  // multiplies to u.  A literal subsequence match of the canonical word of u
  // is a sufficient fast path; otherwise all subsequence products of word(w)
  // are computed once and cached.
  bool bruhat_leq(int u, int w) const {
    if (u == w || u == 0) return true;
    if (length_[u] > length_[w]) return false;
    if (is_subsequence(word_[u], word_[w])) return true;
    return reach_set(w)[u];
  }

  // Stabilizer of v under the shifted action.
  std::vector<int> dot_stabilizer(const Vec& v) const {
    std::vector<int> out;
    for (int w = 0; w < size(); ++w)
      if (dot(w, v) == v) out.push_back(w);
    return out;
  }

  int index_of(const Mat& action) const {
    Vec key = mat_vec(action, datum_->rho);
    auto it = index_by_rho_.find(key);
    if (it == index_by_rho_.end())
      fail_precondition("weyl", "index_of", "matrix is not a group element");
    return it->second;
  }

  // Index of the reflection through the given positive root.
  int reflection(int positive_root_index) const {
    const Vec& root = datum_->positive_roots[positive_root_index];
    const Vec& coroot = datum_->positive_coroots[positive_root_index];
    const int dim = datum_->dim;
    Mat s = identity_matrix(dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) s[r][c] -= root[r] * coroot[c];
    return index_of(s);
  }

 private:
  static bool is_subsequence(const std::vector<int>& small,
                             const std::vector<int>& big) {
    std::size_t at = 0;
    for (int letter : big) {
      if (at < small.size() && small[at] == letter) ++at;
    }
    return at == small.size();
  }

  const std::vector<bool>& reach_set(int w) const {
    auto it = reach_cache_.find(w);
    if (it != reach_cache_.end()) return it->second;
    std::vector<bool> reach(size(), false);
    reach[0] = true;
    for (int i : word_[w]) {
      std::vector<bool> next = reach;
      for (int x = 0; x < size(); ++x)
        if (reach[x]) next[right_[x][i]] = true;
      reach = std::move(next);
    }
    return reach_cache_.emplace(w, std::move(reach)).first->second;
  }

  const RootDatum* datum_;
  std::vector<Mat> action_;
  std::vector<std::vector<int>> word_;
  std::vector<int> length_;
  std::vector<std::vector<int>> right_;
  std::vector<int> inverse_;
  std::map<Vec, int> index_by_rho_;
  int longest_ = 0;
  mutable std::map<int, std::vector<bool>> reach_cache_;
};

}  // namespace cousin
