#include "amalgam/finite_amalgam.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace amalgam::finite {

namespace {

// Pair breadth-first closure of the generator correspondence. The closure is
// the graph of a map iff no element acquires two partners; that map is then
// automatically an isomorphism of the generated subgroups.
void close_pairs(const FiniteGroup& g0, const FiniteGroup& g1, const std::vector<int>& a,
                 const std::vector<int>& b, const std::vector<Perm>& h_gens0,
                 const std::vector<Perm>& h_gens1, std::vector<int>& to1) {
  std::vector<int> to0(size_t(g1.order()), -1);
  to1.assign(size_t(g0.order()), -1);
  to1[0] = 0;
  to0[0] = 0;
  std::vector<std::pair<int, int>> queue{{0, 0}};
  for (size_t at = 0; at < queue.size(); ++at) {
    auto [x, y] = queue[at];
    for (size_t i = 0; i < a.size(); ++i) {
      int nx = g0.mul(x, a[i]);
      int ny = g1.mul(y, b[i]);
      int seen1 = to1[size_t(nx)];
      int seen0 = to0[size_t(ny)];
      if (seen1 == -1 && seen0 == -1) {
        to1[size_t(nx)] = ny;
        to0[size_t(ny)] = nx;
        queue.push_back({nx, ny});
        continue;
      }
      if (seen1 != ny || seen0 != nx)
        throw std::invalid_argument(
            "amalgam spec: generator pair " + std::to_string(i) + " (" +
            perm_label(h_gens0[i]) + " ~ " + perm_label(h_gens1[i]) +
            ") does not extend to an isomorphism: factor-0 element " + g0.label(nx) +
            " vs factor-1 element " + g1.label(ny));
    }
  }
}

std::vector<Perm> parse_perm_list(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) throw std::invalid_argument("amalgam spec: " + what + " must be an array");
  std::vector<Perm> out;
  for (const auto& row : j) {
    Perm p;
    for (const auto& v : row) p.push_back(v.get<int>());
    if (!is_permutation(p))
      throw std::invalid_argument("amalgam spec: " + what + " entry is not a permutation");
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

AmalgamSpec make_amalgam(FiniteGroup g0, FiniteGroup g1, const std::vector<Perm>& h_gens0,
                         const std::vector<Perm>& h_gens1) {
  if (h_gens0.size() != h_gens1.size())
    throw std::invalid_argument("amalgam spec: generator lists differ in length");
  std::vector<int> a, b;
  for (size_t i = 0; i < h_gens0.size(); ++i) {
    int ai = g0.index_of(h_gens0[i]);
    int bi = g1.index_of(h_gens1[i]);
    if (ai < 0 || bi < 0)
      throw std::invalid_argument("amalgam spec: generator pair " + std::to_string(i) +
                                  " is not contained in its factor group");
    a.push_back(ai);
    b.push_back(bi);
  }

  std::vector<int> to1;
  close_pairs(g0, g1, a, b, h_gens0, h_gens1, to1);

  AmalgamSpec spec;
  spec.g[0] = std::make_shared<FiniteGroup>(std::move(g0));
  spec.g[1] = std::make_shared<FiniteGroup>(std::move(g1));
  for (int x = 0; x < spec.g[0]->order(); ++x)
    if (to1[size_t(x)] != -1) spec.h.push_back({x, to1[size_t(x)]});

  for (int f : {0, 1}) {
    std::vector<int> elems;
    for (const auto& [x, y] : spec.h) elems.push_back(f == 0 ? x : y);
    std::sort(elems.begin(), elems.end());
    spec.h_sub[f] = Subgroup{spec.g[f].get(), std::move(elems)};
    if (!is_subgroup_closed(spec.h_sub[f]))
      throw std::logic_error("amalgam spec: embedded image is not closed");
    spec.h_of[f].assign(size_t(spec.g[f]->order()), -1);
  }
  for (size_t i = 0; i < spec.h.size(); ++i) {
    spec.h_of[0][size_t(spec.h[i].first)] = int(i);
    spec.h_of[1][size_t(spec.h[i].second)] = int(i);
  }
  return spec;
}

AmalgamSpec load_amalgam_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  for (const char* key : {"g0", "g1", "h_gens_in_g0", "h_gens_in_g1"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("amalgam spec: missing key \"") + key + "\"");
  FiniteGroup g0 = FiniteGroup::closure_from_generators(parse_perm_list(j["g0"]["perms"], "g0.perms"));
  FiniteGroup g1 = FiniteGroup::closure_from_generators(parse_perm_list(j["g1"]["perms"], "g1.perms"));
  return make_amalgam(std::move(g0), std::move(g1),
                      parse_perm_list(j["h_gens_in_g0"], "h_gens_in_g0"),
                      parse_perm_list(j["h_gens_in_g1"], "h_gens_in_g1"));
}

AmalgamSpec load_amalgam_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("amalgam spec: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_amalgam_json_text(buf.str());
}

AmalgamSpec builtin_spec(const std::string& name) {
  if (name == "s3-s3") {
    std::vector<Perm> s3 = {{1, 0, 2}, {1, 2, 0}};
    std::vector<Perm> swap01 = {{1, 0, 2}};
    return make_amalgam(FiniteGroup::closure_from_generators(s3),
                        FiniteGroup::closure_from_generators(s3), swap01, swap01);
  }
  if (name == "z4-z6") {
    FiniteGroup z4 = FiniteGroup::closure_from_generators({{1, 2, 3, 0}});
    FiniteGroup z6 = FiniteGroup::closure_from_generators({{1, 2, 3, 4, 5, 0}});
    return make_amalgam(std::move(z4), std::move(z6), {{2, 3, 0, 1}},
                        {{3, 4, 5, 0, 1, 2}});
  }
  if (name == "z6-v4") {
    FiniteGroup z6 = FiniteGroup::closure_from_generators({{1, 2, 0, 4, 3}});
    FiniteGroup v4 = FiniteGroup::closure_from_generators({{1, 0, 2, 3}, {0, 1, 3, 2}});
    return make_amalgam(std::move(z6), std::move(v4), {{0, 1, 2, 4, 3}}, {{1, 0, 2, 3}});
  }
  throw std::invalid_argument("unknown builtin spec: " + name);
}

std::vector<std::string> builtin_spec_names() { return {"s3-s3", "z4-z6", "z6-v4"}; }

AmalgamSpec quotient_amalgam(const AmalgamSpec& spec, const std::vector<int>& n_hidx) {
  FiniteContext ctx(spec);
  std::vector<int> n_sorted = n_hidx;
  std::sort(n_sorted.begin(), n_sorted.end());
  auto in_n = [&](int h) {
    return std::binary_search(n_sorted.begin(), n_sorted.end(), h);
  };
  if (n_sorted.empty() || n_sorted.front() != 0)
    throw std::invalid_argument("quotient_amalgam: subgroup must contain the identity");
  for (int x : n_sorted) {
    if (x < 0 || x >= spec.h_order())
      throw std::invalid_argument("quotient_amalgam: index outside the amalgamated subgroup");
    if (!in_n(ctx.h_inv(x)))
      throw std::invalid_argument("quotient_amalgam: subgroup not closed under inverse");
    for (int y : n_sorted)
      if (!in_n(ctx.h_mul(x, y)))
        throw std::invalid_argument("quotient_amalgam: subgroup not closed under product");
  }

  Quotient q[2];
  for (int f : {0, 1}) {
    std::vector<int> image;
    for (int x : n_sorted) image.push_back(spec.h_elem(f, x));
    std::sort(image.begin(), image.end());
    Subgroup nf{spec.g[f].get(), std::move(image)};
    if (!is_normal(*spec.g[f], nf))
      throw std::invalid_argument("quotient_amalgam: subgroup not normal in factor " +
                                  std::to_string(f));
    q[f] = quotient_group(*spec.g[f], nf);
  }

  std::vector<Perm> gens0, gens1;
  for (int i = 0; i < spec.h_order(); ++i) {
    gens0.push_back(q[0].group.perm(q[0].proj[size_t(spec.h_elem(0, i))]));
    gens1.push_back(q[1].group.perm(q[1].proj[size_t(spec.h_elem(1, i))]));
  }
  AmalgamSpec out = make_amalgam(std::move(q[0].group), std::move(q[1].group), gens0, gens1);

  FiniteContext out_ctx(out);
  for (int f : {0, 1})
    if (out_ctx.index_of_h(f) != ctx.index_of_h(f))
      throw std::logic_error("quotient_amalgam: coset index changed in factor " +
                             std::to_string(f));
  return out;
}

FiniteContext::FiniteContext(const AmalgamSpec& spec) : spec_(&spec) {
  for (int f : {0, 1}) ct_[f] = coset_transversal(*spec.g[f], spec.h_sub[f]);
}

int FiniteContext::h_mul(HElem a, HElem b) const {
  int prod = spec_->g[0]->mul(spec_->h[size_t(a)].first, spec_->h[size_t(b)].first);
  return spec_->h_of[0][size_t(prod)];
}

int FiniteContext::h_inv(HElem a) const {
  return spec_->h_of[0][size_t(spec_->g[0]->inv(spec_->h[size_t(a)].first))];
}

std::pair<int, int> FiniteContext::decompose(const FElem& x) const {
  auto [c, rest] = ct_[x.factor].decompose(x.elem);
  int h = spec_->h_of[x.factor][size_t(rest)];
  if (h < 0) throw std::logic_error("decompose: remainder escaped the subgroup");
  return {c, h};
}

FiniteContext::FElem FiniteContext::f_mul(const FElem& a, const FElem& b) const {
  if (a.factor != b.factor) throw std::logic_error("f_mul: factor mismatch");
  return FElem{a.factor, spec_->g[a.factor]->mul(a.elem, b.elem)};
}

FiniteContext::FElem FiniteContext::f_inv(const FElem& a) const {
  return FElem{a.factor, spec_->g[a.factor]->inv(a.elem)};
}

}  // namespace amalgam::finite
