#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cousin/errors.hpp"
#include "cousin/linalg.hpp"
#include "cousin/rational.hpp"

namespace cousin {

// Applies a coordinate permutation (i -> perm[i]) linearly to a vector.
inline Vec apply_permutation(const std::vector<int>& perm, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[perm[i]] = v[i];
  return out;
}

inline std::vector<int> compose_permutations(const std::vector<int>& outer,
                                             const std::vector<int>& inner) {
  std::vector<int> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

// A root datum living in an ambient rational weight space.  Extra central or
// similitude coordinates are simply ambient dimensions on which every root
// vanishes; all chamber tests go through coroot pairings and ignore them
// automatically.  A finite permutation group on the coordinates ("gamma")
// models a Galois action permuting the simple roots; restriction to the
// maximal split part is averaging over that group.
struct RootDatum {
  int dim = 0;
  std::vector<Vec> simple_roots;
  std::vector<Vec> simple_coroots;
  std::vector<std::vector<int>> gamma_generators;
  std::string preset_tag;

  // Derived, filled by make_root_datum.
  std::vector<std::vector<int>> gamma_group;  // all elements, identity first
  std::vector<Vec> positive_roots;            // sorted by (height, coordinates)
  std::vector<Vec> positive_coroots;          // aligned with positive_roots
  std::vector<std::vector<int>> positive_coords;  // simple-basis coordinates
  std::vector<int> positive_heights;
  Vec rho;                       // half the sum of the positive roots
  ConeSolver cone_absolute;      // nonnegative cone on the simple roots
  std::vector<Vec> delta_restricted;  // distinct restrictions of simple roots
  std::vector<int> restriction_map;   // simple index -> index in delta_restricted
  ConeSolver cone_split;         // nonnegative cone on delta_restricted

  int rank() const { return static_cast<int>(simple_roots.size()); }

  std::optional<int> positive_root_index(const Vec& v) const {
    auto it = root_index_.find(v);
    if (it == root_index_.end()) return std::nullopt;
    return it->second;
  }
  bool is_positive_root(const Vec& v) const {
    return root_index_.count(v) > 0;
  }
  bool is_root(const Vec& v) const {
    return is_positive_root(v) || is_positive_root(-v);
  }

  std::map<Vec, int> root_index_;  // positive roots only
};

inline Rat pairing(const Vec& lambda, const Vec& covector) {
  return dot(lambda, covector);
}

// Gamma-average: the projection of the ambient space onto gamma-invariants.
inline Vec restrict_to_split(const RootDatum& datum, const Vec& v) {
  if (static_cast<int>(v.size()) != datum.dim)
    fail_precondition("root_datum", "restrict_to_split", "dimension mismatch");
  if (datum.gamma_group.size() <= 1) return v;
  Vec acc = zero_vec(v.size());
  for (const auto& perm : datum.gamma_group) acc = acc + apply_permutation(perm, v);
  return Rat(1, static_cast<long long>(datum.gamma_group.size())) * acc;
}

inline bool is_gamma_invariant(const RootDatum& datum, const Vec& v) {
  for (const auto& perm : datum.gamma_group)
    if (apply_permutation(perm, v) != v) return false;
  return true;
}

enum class Chamber { G, M };

struct LeviDatum {
  std::vector<int> theta;  // sorted simple-root indices generating the Levi
  std::vector<bool> positive_in_levi;  // per positive root of the ambient datum
  std::vector<int> levi_positive;      // indices of positive roots in the Levi
  std::vector<int> non_levi_positive;  // indices of the complement
  int d = 0;                           // size of the complement
};

inline LeviDatum make_levi(const RootDatum& datum, std::vector<int> theta) {
  std::sort(theta.begin(), theta.end());
  theta.erase(std::unique(theta.begin(), theta.end()), theta.end());
  for (int i : theta) {
    if (i < 0 || i >= datum.rank())
      fail_config("root_datum", "make_levi",
                  "levi index " + std::to_string(i) + " out of range");
  }
  LeviDatum levi;
  levi.theta = std::move(theta);
  std::vector<bool> in_theta(datum.rank(), false);
  for (int i : levi.theta) in_theta[i] = true;
  const std::size_t n = datum.positive_roots.size();
  levi.positive_in_levi.assign(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    bool inside = true;
    for (int i = 0; i < datum.rank(); ++i) {
      if (datum.positive_coords[r][i] != 0 && !in_theta[i]) {
        inside = false;
        break;
      }
    }
    levi.positive_in_levi[r] = inside;
    if (inside)
      levi.levi_positive.push_back(static_cast<int>(r));
    else
      levi.non_levi_positive.push_back(static_cast<int>(r));
  }
  levi.d = static_cast<int>(levi.non_levi_positive.size());
  return levi;
}

inline Vec rho_of(const RootDatum& datum) { return datum.rho; }

inline Vec rho_levi(const RootDatum& datum, const LeviDatum& levi) {
  Vec acc = zero_vec(datum.dim);
  for (int r : levi.levi_positive) acc = acc + datum.positive_roots[r];
  return Rat(1, 2) * acc;
}

// Sum of the positive roots outside the Levi (equals 2*rho - 2*rho_M).
inline Vec two_rho_nc(const RootDatum& datum, const LeviDatum& levi) {
  Vec acc = zero_vec(datum.dim);
  for (int r : levi.non_levi_positive) acc = acc + datum.positive_roots[r];
  return acc;
}

inline bool is_dominant(const RootDatum& datum, const Vec& v,
                        Chamber chamber = Chamber::G,
                        const LeviDatum* levi = nullptr) {
  if (chamber == Chamber::M) {
    if (levi == nullptr)
      fail_precondition("root_datum", "is_dominant", "M chamber requires a levi");
    for (int i : levi->theta)
      if (dot(v, datum.simple_coroots[i]) < 0) return false;
    return true;
  }
  for (const Vec& covec : datum.simple_coroots)
    if (dot(v, covec) < 0) return false;
  return true;
}

inline bool is_antidominant(const RootDatum& datum, const Vec& v) {
  for (const Vec& covec : datum.simple_coroots)
    if (dot(v, covec) > 0) return false;
  return true;
}

inline bool is_regular(const RootDatum& datum, const Vec& v) {
  for (const Vec& covec : datum.positive_coroots)
    if (dot(v, covec) == 0) return false;
  return true;
}

namespace detail {

inline void close_gamma_group(RootDatum& datum) {
  std::vector<int> id(datum.dim);
  for (int i = 0; i < datum.dim; ++i) id[i] = i;
  std::set<std::vector<int>> seen;
  seen.insert(id);
  std::vector<std::vector<int>> order{id};
  const long long bound = enumeration_bound(10000);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& gen : datum.gamma_generators) {
      auto next = compose_permutations(gen, order[head]);
      if (seen.insert(next).second) {
        order.push_back(next);
        if (static_cast<long long>(order.size()) > bound)
          fail_resource("root_datum", "gamma_closure",
                        "permutation group exceeds enumeration bound");
      }
    }
  }
  datum.gamma_group = std::move(order);
}

inline void validate_gamma(const RootDatum& datum) {
  for (const auto& perm : datum.gamma_generators) {
    if (static_cast<int>(perm.size()) != datum.dim)
      fail_config("root_datum", "validate", "gamma generator has wrong size");
    std::vector<bool> hit(datum.dim, false);
    for (int image : perm) {
      if (image < 0 || image >= datum.dim || hit[image])
        fail_config("root_datum", "validate", "gamma generator is not a permutation");
      hit[image] = true;
    }
    // Each generator must permute the simple roots (with matching coroots).
    for (int i = 0; i < datum.rank(); ++i) {
      Vec image_root = apply_permutation(perm, datum.simple_roots[i]);
      Vec image_coroot = apply_permutation(perm, datum.simple_coroots[i]);
      bool found = false;
      for (int j = 0; j < datum.rank(); ++j) {
        if (datum.simple_roots[j] == image_root) {
          if (datum.simple_coroots[j] != image_coroot)
            fail_precondition("root_datum", "validate",
                              "gamma does not commute with the pairing");
          found = true;
          break;
        }
      }
      if (!found)
        fail_precondition("root_datum", "validate",
                          "gamma does not permute the simple roots");
    }
  }
}

inline void close_roots(RootDatum& datum) {
  const int m = datum.rank();
  std::map<Vec, Vec> roots;  // root -> coroot
  std::vector<Vec> queue;
  for (int i = 0; i < m; ++i) {
    roots[datum.simple_roots[i]] = datum.simple_coroots[i];
    queue.push_back(datum.simple_roots[i]);
  }
  const long long bound = enumeration_bound(10000);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vec beta = queue[head];
    const Vec beta_cov = roots[beta];
    for (int i = 0; i < m; ++i) {
      // Simple reflection on roots and the matching reflection on coroots.
      Rat c = dot(beta, datum.simple_coroots[i]);
      Rat c_cov = dot(datum.simple_roots[i], beta_cov);
      Vec image = beta - c * datum.simple_roots[i];
      Vec image_cov = beta_cov - c_cov * datum.simple_coroots[i];
      auto it = roots.find(image);
      if (it == roots.end()) {
        roots[image] = image_cov;
        queue.push_back(image);
        if (static_cast<long long>(roots.size()) > bound)
          fail_resource("root_datum", "root_closure",
                        "root closure exceeds enumeration bound; "
                        "input is probably not of finite type");
      } else if (it->second != image_cov) {
        fail_precondition("root_datum", "root_closure",
                          "inconsistent coroot produced by reflections");
      }
    }
  }

  // Split into positive and negative roots via simple-basis coordinates.
  struct Entry {
    int height;
    std::vector<int> coords;
    Vec root;
    Vec coroot;
  };
  std::vector<Entry> positives;
  for (const auto& [root, coroot] : roots) {
    auto span = datum.cone_absolute.span_coordinates(root);
    if (!span)
      fail_precondition("root_datum", "root_closure",
                        "closure produced a root outside the simple-root span");
    bool nonneg = true, nonpos = true, integral = true;
    std::vector<int> coords(m, 0);
    int height = 0;
    for (int i = 0; i < m; ++i) {
      const Rat& x = (*span)[i];
      if (!is_integer(x)) integral = false;
      if (x > 0) nonpos = false;
      if (x < 0) nonneg = false;
      if (integral) {
        coords[i] = static_cast<int>(numerator(x));
        height += coords[i];
      }
    }
    if (!integral || (!nonneg && !nonpos) || (nonneg && nonpos))
      fail_precondition("root_datum", "root_closure",
                        "root " + to_string(root) +
                            " is not a signed integral combination of the "
                            "simple roots");
    if (nonneg) positives.push_back({height, coords, root, coroot});
  }
  if (2 * positives.size() != roots.size())
    fail_precondition("root_datum", "root_closure",
                      "root set is not symmetric under negation");
  for (const auto& entry : positives) {
    if (roots.find(-entry.root) == roots.end())
      fail_precondition("root_datum", "root_closure",
                        "missing negative of a positive root");
  }
  std::sort(positives.begin(), positives.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coords < b.coords;
  });
  for (const auto& entry : positives) {
    datum.root_index_[entry.root] =
        static_cast<int>(datum.positive_roots.size());
    datum.positive_roots.push_back(entry.root);
    datum.positive_coroots.push_back(entry.coroot);
    datum.positive_coords.push_back(entry.coords);
    datum.positive_heights.push_back(entry.height);
  }
}

inline void build_restriction(RootDatum& datum) {
  datum.delta_restricted.clear();
  datum.restriction_map.assign(datum.rank(), -1);
  for (int i = 0; i < datum.rank(); ++i) {
    Vec r = restrict_to_split(datum, datum.simple_roots[i]);
    int found = -1;
    for (std::size_t j = 0; j < datum.delta_restricted.size(); ++j) {
      if (datum.delta_restricted[j] == r) {
        found = static_cast<int>(j);
        break;
      }
    }
    if (found < 0) {
      found = static_cast<int>(datum.delta_restricted.size());
      datum.delta_restricted.push_back(r);
    }
    datum.restriction_map[i] = found;
  }
  datum.cone_split = ConeSolver(datum.delta_restricted, datum.dim);
}

}  // namespace detail

inline RootDatum make_root_datum(int dim, std::vector<Vec> simple_roots,
                                 std::vector<Vec> simple_coroots,
                                 std::vector<std::vector<int>> gamma_generators,
                                 std::string preset_tag) {
  RootDatum datum;
  datum.dim = dim;
  datum.simple_roots = std::move(simple_roots);
  datum.simple_coroots = std::move(simple_coroots);
  datum.gamma_generators = std::move(gamma_generators);
  datum.preset_tag = std::move(preset_tag);

  if (dim <= 0) fail_config("root_datum", "validate", "dimension must be positive");
  if (datum.simple_roots.size() != datum.simple_coroots.size())
    fail_config("root_datum", "validate",
                "simple roots and coroots must come in pairs");
  if (datum.simple_roots.empty())
    fail_config("root_datum", "validate", "at least one simple root is required");
  for (const Vec& v : datum.simple_roots)
    if (static_cast<int>(v.size()) != dim)
      fail_config("root_datum", "validate", "simple root has wrong dimension");
  for (const Vec& v : datum.simple_coroots)
    if (static_cast<int>(v.size()) != dim)
      fail_config("root_datum", "validate", "simple coroot has wrong dimension");

  // Cartan-matrix shape conditions.
  const int m = datum.rank();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Rat a = dot(datum.simple_roots[i], datum.simple_coroots[j]);
      if (i == j && a != 2)
        fail_precondition("root_datum", "validate",
                          "diagonal pairing of simple root " + std::to_string(i) +
                              " is " + to_string(a) + ", expected 2");
      if (i != j) {
        if (a > 0)
          fail_precondition("root_datum", "validate",
                            "off-diagonal Cartan entry must be <= 0");
        Rat b = dot(datum.simple_roots[j], datum.simple_coroots[i]);
        if ((a == 0) != (b == 0))
          fail_precondition("root_datum", "validate",
                            "Cartan zero pattern must be symmetric");
      }
    }
  }

  datum.cone_absolute = ConeSolver(datum.simple_roots, dim);
  detail::validate_gamma(datum);
  detail::close_gamma_group(datum);
  detail::close_roots(datum);
  detail::build_restriction(datum);

  Vec acc = zero_vec(dim);
  for (const Vec& root : datum.positive_roots) acc = acc + root;
  datum.rho = Rat(1, 2) * acc;
  return datum;
}

// ---------------------------------------------------------------------------
// Presets.
// ---------------------------------------------------------------------------

namespace detail {

inline Vec unit_vec(int dim, int at, const Rat& value) {
  Vec v = zero_vec(dim);
  v[at] = value;
  return v;
}

// Dimension-(g+1) symplectic-similitude datum in coordinates (k_1..k_g; k):
// compact simple roots e_i - e_{i+1} and the long noncompact root -2e_1,
// chosen so the dominant chamber is {0 >= k_1 >= ... >= k_g}.
inline RootDatum make_gsp(int g, const std::string& tag) {
  if (g < 1) fail_config("root_datum", "preset", "GSp2g requires g >= 1");
  const int dim = g + 1;
  std::vector<Vec> roots, coroots;
  for (int i = 0; i + 1 < g; ++i) {
    Vec r = zero_vec(dim);
    r[i] = 1;
    r[i + 1] = -1;
    roots.push_back(r);
    coroots.push_back(r);
  }
  roots.push_back(unit_vec(dim, 0, Rat(-2)));
  coroots.push_back(unit_vec(dim, 0, Rat(-1)));
  return make_root_datum(dim, roots, coroots, {}, tag);
}

inline RootDatum block_sum(const RootDatum& a, const RootDatum& b,
                           const std::string& tag) {
  const int dim = a.dim + b.dim;
  std::vector<Vec> roots, coroots;
  auto pad_left = [&](const Vec& v) {
    Vec out = zero_vec(dim);
    for (int i = 0; i < a.dim; ++i) out[i] = v[i];
    return out;
  };
  auto pad_right = [&](const Vec& v) {
    Vec out = zero_vec(dim);
    for (int i = 0; i < b.dim; ++i) out[a.dim + i] = v[i];
    return out;
  };
  for (const Vec& v : a.simple_roots) roots.push_back(pad_left(v));
  for (const Vec& v : b.simple_roots) roots.push_back(pad_right(v));
  for (const Vec& v : a.simple_coroots) coroots.push_back(pad_left(v));
  for (const Vec& v : b.simple_coroots) coroots.push_back(pad_right(v));
  std::vector<std::vector<int>> gens;
  for (const auto& perm : a.gamma_generators) {
    std::vector<int> ext(dim);
    for (int i = 0; i < a.dim; ++i) ext[i] = perm[i];
    for (int i = 0; i < b.dim; ++i) ext[a.dim + i] = a.dim + i;
    gens.push_back(ext);
  }
  for (const auto& perm : b.gamma_generators) {
    std::vector<int> ext(dim);
    for (int i = 0; i < a.dim; ++i) ext[i] = i;
    for (int i = 0; i < b.dim; ++i) ext[a.dim + i] = a.dim + perm[i];
    gens.push_back(ext);
  }
  return make_root_datum(dim, roots, coroots, gens, tag);
}

}  // namespace detail

inline RootDatum preset_datum(const std::string& name);

namespace detail {

// r block copies of the base datum with a cyclic block-shift gamma action
// (plus the base action applied diagonally).
inline RootDatum make_restriction_preset(const RootDatum& base, int copies,
                                         const std::string& tag) {
  if (copies < 1)
    fail_config("root_datum", "preset", "res preset needs a positive exponent");
  const int n = base.dim;
  const int dim = n * copies;
  std::vector<Vec> roots, coroots;
  for (int b = 0; b < copies; ++b) {
    for (const Vec& v : base.simple_roots) {
      Vec out = zero_vec(dim);
      for (int i = 0; i < n; ++i) out[b * n + i] = v[i];
      roots.push_back(out);
    }
  }
  for (int b = 0; b < copies; ++b) {
    for (const Vec& v : base.simple_coroots) {
      Vec out = zero_vec(dim);
      for (int i = 0; i < n; ++i) out[b * n + i] = v[i];
      coroots.push_back(out);
    }
  }
  std::vector<std::vector<int>> gens;
  if (copies > 1) {
    std::vector<int> shift(dim);
    for (int b = 0; b < copies; ++b)
      for (int i = 0; i < n; ++i) shift[b * n + i] = ((b + 1) % copies) * n + i;
    gens.push_back(shift);
  }
  for (const auto& perm : base.gamma_generators) {
    std::vector<int> diag(dim);
    for (int b = 0; b < copies; ++b)
      for (int i = 0; i < n; ++i) diag[b * n + i] = b * n + perm[i];
    gens.push_back(diag);
  }
  return make_root_datum(dim, roots, coroots, gens, tag);
}

}  // namespace detail

// Built-in preset registry.  Accepted names:
//   "A1", "A2", "C2", "GSp4", "GSp2g:g=<n>",
//   "product:<p1>x<p2>"  (block direct sum),
//   "res:<preset>^<r>"   (r copies with a cyclic coordinate-block gamma).
inline RootDatum preset_datum(const std::string& name) {
  if (name == "A1") {
    return make_root_datum(1, {Vec{Rat(2)}}, {Vec{Rat(1)}}, {}, name);
  }
  if (name == "A2") {
    // Fundamental-weight coordinates: alpha_i rows of the Cartan matrix.
    return make_root_datum(2, {Vec{Rat(2), Rat(-1)}, Vec{Rat(-1), Rat(2)}},
                           {Vec{Rat(1), Rat(0)}, Vec{Rat(0), Rat(1)}}, {}, name);
  }
  if (name == "C2" || name == "GSp4") {
    RootDatum d = detail::make_gsp(2, name);
    return d;
  }
  if (name.rfind("GSp2g:g=", 0) == 0) {
    const std::string arg = name.substr(8);
    try {
      std::size_t used = 0;
      int g = std::stoi(arg, &used);
      if (used != arg.size() || g < 1) throw std::invalid_argument(arg);
      return detail::make_gsp(g, name);
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail_config("root_datum", "preset", "bad GSp2g preset '" + name + "'");
    }
  }
  if (name.rfind("product:", 0) == 0) {
    const std::string body = name.substr(8);
    for (std::size_t pos = 1; pos + 1 <= body.size(); ++pos) {
      if (body[pos] != 'x') continue;
      const std::string left = body.substr(0, pos);
      const std::string right = body.substr(pos + 1);
      try {
        RootDatum a = preset_datum(left);
        RootDatum b = preset_datum(right);
        return detail::block_sum(a, b, name);
      } catch (const Error&) {
        continue;  // try the next split point
      }
    }
    fail_config("root_datum", "preset",
                "cannot split product preset '" + name + "' into two presets");
  }
  if (name.rfind("res:", 0) == 0) {
    const std::string body = name.substr(4);
    const std::size_t caret = body.rfind('^');
    if (caret == std::string::npos)
      fail_config("root_datum", "preset", "res preset needs '^<r>'");
    const std::string base_name = body.substr(0, caret);
    const std::string exp = body.substr(caret + 1);
    try {
      std::size_t used = 0;
      int copies = std::stoi(exp, &used);
      if (used != exp.size() || copies < 1) throw std::invalid_argument(exp);
      RootDatum base = preset_datum(base_name);
      return detail::make_restriction_preset(base, copies, name);
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail_config("root_datum", "preset", "bad res preset '" + name + "'");
    }
  }
  fail_config("root_datum", "preset", "unknown preset '" + name + "'");
}

}  // namespace cousin
