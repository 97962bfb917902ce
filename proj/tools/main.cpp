#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "amalgam/acceptance.hpp"
#include "amalgam/finite_invariants.hpp"
#include "amalgam/gamma_invariants.hpp"
#include "amalgam/tree.hpp"

namespace {

using namespace amalgam;
using nlohmann::json;

struct Common {
  std::string group = "gamma";
  std::string spec_path;
  bool json_out = false;
  uint64_t seed = kAcceptanceSeed;
  int jobs = 1;
};

void add_group_options(CLI::App* sub, Common& c) {
  auto* g = sub->add_option("--group", c.group, "builtin group id: gamma, s3-s3, z4-z6, z6-v4")
                ->capture_default_str();
  sub->add_option("--spec", c.spec_path, "path to a JSON amalgam spec file")->excludes(g);
}

void add_json_option(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json_out, "machine-readable output");
}

bool is_gamma(const Common& c) { return c.spec_path.empty() && c.group == "gamma"; }

finite::AmalgamSpec load_finite(const Common& c) {
  if (!c.spec_path.empty()) return finite::load_amalgam_json_file(c.spec_path);
  return finite::builtin_spec(c.group);
}

int gamma_only_error(const char* cmd) {
  std::cerr << cmd << ": word arithmetic is defined for --group gamma only\n";
  return 2;
}

std::string render_nf(const finite::FiniteContext& ctx,
                      const NormalForm<finite::FiniteContext>& x) {
  std::string s;
  auto emit = [&s](const std::string& tok) {
    if (!s.empty()) s.push_back(' ');
    s += tok;
  };
  for (const Syllable& q : x.syl)
    emit("r" + std::to_string(q.factor) + "." + std::to_string(q.index));
  if (!ctx.h_is_identity(x.tail)) emit("h." + std::to_string(x.tail));
  return s.empty() ? "e" : s;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

int cmd_reduce(const Common& c, const std::string& text) {
  if (!is_gamma(c)) return gamma_only_error("reduce");
  gamma::GammaContext ctx;
  auto nf = gamma::normalize_word(ctx, gamma::parse_word(text));
  if (c.json_out) {
    json j;
    j["in_h"] = nf_in_h(nf);
    j["input"] = text;
    j["normal_form"] = gamma::nf_to_string(nf);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << gamma::nf_to_string(nf) << "\n";
  }
  return 0;
}

int cmd_mul(const Common& c, const std::string& a, const std::string& b) {
  if (!is_gamma(c)) return gamma_only_error("mul");
  gamma::GammaContext ctx;
  auto x = gamma::normalize_word(ctx, gamma::parse_word(a));
  auto y = gamma::normalize_word(ctx, gamma::parse_word(b));
  auto p = nf_mul(ctx, x, y);
  if (c.json_out) {
    json j;
    j["left"] = a;
    j["product"] = gamma::nf_to_string(p);
    j["right"] = b;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << gamma::nf_to_string(p) << "\n";
  }
  return 0;
}

int cmd_theta(const Common& c, const std::string& text) {
  if (!is_gamma(c)) return gamma_only_error("theta");
  gamma::GammaContext ctx;
  auto nf = gamma::normalize_word(ctx, gamma::parse_word(text));
  gamma::ThetaValue v = gamma::theta_nf(nf);
  if (c.json_out) {
    json j;
    j["in_kernel"] = v.is_identity();
    j["theta"] = v.str();
    j["word"] = text;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << v.str() << "\n";
  }
  return 0;
}

int cmd_verify_presentation(const Common& c) {
  CheckResult r = run_check(1, c.seed);
  if (c.json_out) {
    json j;
    j["detail"] = r.detail;
    j["name"] = r.name;
    j["pass"] = r.pass;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << format_acceptance({r});
  }
  return r.pass ? 0 : 1;
}

int cmd_kernel(const Common& c, int depth, int max_len) {
  if (is_gamma(c)) {
    auto kt = gamma::kernel_truncated(depth, max_len);
    if (c.json_out) {
      json j;
      j["depth"] = depth;
      json elems = json::array();
      for (const Portrait& h : kt.elements) elems.push_back(h.is_identity() ? "e" : h.str());
      j["elements"] = elems;
      j["max_len"] = max_len;
      j["undecided"] = kt.undecided;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "truncated kernel at depth " << depth << "\n";
      std::cout << "elements: " << kt.elements.size() << "\n";
      for (const Portrait& h : kt.elements)
        std::cout << "  " << (h.is_identity() ? "e" : h.str()) << "\n";
      std::cout << "undecided: " << kt.undecided << "\n";
    }
    return 0;
  }

  auto spec = load_finite(c);
  auto rep = finite::k0k1_fixed_point(spec);
  int n = int(rep.ker.size());
  if (c.json_out) {
    json j;
    json chain = json::array();
    for (const auto& [a, b] : rep.chain) chain.push_back({a.size(), b.size()});
    j["chain"] = chain;
    j["k0_order"] = rep.k0.size();
    j["k1_order"] = rep.k1.size();
    j["ker"] = rep.ker;
    j["ker_order"] = n;
    j["ker_trivial"] = rep.ker_trivial();
    j["stabilized_at"] = rep.stabilized_at;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "chain (|A_k|,|B_k|):";
    for (const auto& [a, b] : rep.chain) std::cout << " (" << a.size() << "," << b.size() << ")";
    std::cout << "\nstabilized at: " << rep.stabilized_at << "\n";
    std::cout << "k0 order: " << rep.k0.size() << ", k1 order: " << rep.k1.size() << "\n";
    std::cout << "ker order: " << n << "\n";
    if (rep.ker_trivial())
      std::cout << "ker trivial\n";
    else if (is_prime(n))
      std::cout << "ker = Z" << n << "\n";
  }
  return 0;
}

int cmd_classify(const Common& c, int witness_bound) {
  if (is_gamma(c)) {
    std::cerr << "classify: requires an amalgam of finite groups (--group or --spec)\n";
    return 2;
  }
  auto spec = load_finite(c);
  finite::FiniteContext ctx(spec);
  auto rep = finite::classify_finite_H(spec, witness_bound);
  if (c.json_out) {
    json j;
    j["all_equivalent"] = rep.all_equivalent;
    j["c_trivial_at"] = rep.c_trivial_at ? json(*rep.c_trivial_at) : json(nullptr);
    j["conjugator_witness"] =
        rep.conjugator_witness ? json(render_nf(ctx, *rep.conjugator_witness)) : json(nullptr);
    j["fc_equals_ker"] = rep.fc_equals_ker;
    j["ker"] = rep.kernel.ker;
    j["ker_order"] = rep.kernel.ker.size();
    j["ker_trivial"] = rep.ker_trivial;
    j["witness_bound"] = rep.witness_bound;
    j["witness_bound_exhausted"] = rep.witness_bound_exhausted;
    j["witness_proven_absent"] = rep.witness_proven_absent;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "ker order: " << rep.kernel.ker.size()
              << (rep.ker_trivial ? " (trivial)" : "") << "\n";
    std::cout << "chain trivial at: "
              << (rep.c_trivial_at ? std::to_string(*rep.c_trivial_at) : std::string("never"))
              << "\n";
    std::cout << "conjugator witness: "
              << (rep.conjugator_witness ? render_nf(ctx, *rep.conjugator_witness)
                                         : std::string("none"))
              << "\n";
    std::cout << "witness proven absent: " << yesno(rep.witness_proven_absent) << "\n";
    std::cout << "witness bound exhausted: " << yesno(rep.witness_bound_exhausted) << " (bound "
              << rep.witness_bound << ")\n";
    std::cout << "fc equals ker: " << yesno(rep.fc_equals_ker) << "\n";
    std::cout << "all equivalent: " << yesno(rep.all_equivalent) << "\n";
  }
  return rep.all_equivalent ? 0 : 1;
}

int cmd_c_chain(const Common& c, int j_side, int depth, int levels) {
  if (is_gamma(c)) {
    auto chain = gamma::c_chain_truncated(j_side, depth, levels);
    if (c.json_out) {
      json j;
      j["depth"] = depth;
      j["j"] = j_side;
      json sizes = json::array();
      for (const auto& lvl : chain) sizes.push_back(lvl.size());
      j["level_sizes"] = sizes;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "level sizes:";
      for (const auto& lvl : chain) std::cout << " " << lvl.size();
      std::cout << "\n";
    }
    return 0;
  }

  auto spec = load_finite(c);
  auto rep = finite::k0k1_fixed_point(spec);
  std::vector<size_t> sizes;
  int trivial_at = -1;
  for (size_t k = 0; k < rep.chain.size(); ++k) {
    std::vector<int> both;
    std::set_intersection(rep.chain[k].first.begin(), rep.chain[k].first.end(),
                          rep.chain[k].second.begin(), rep.chain[k].second.end(),
                          std::back_inserter(both));
    sizes.push_back(both.size());
    if (trivial_at < 0 && both.size() == 1) trivial_at = int(k);
  }
  if (c.json_out) {
    json j;
    j["level_sizes"] = sizes;
    j["trivial_at"] = trivial_at >= 0 ? json(trivial_at) : json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "level sizes (A_k cap B_k):";
    for (size_t s : sizes) std::cout << " " << s;
    std::cout << "\ntrivial at: "
              << (trivial_at >= 0 ? std::to_string(trivial_at) : std::string("never")) << "\n";
  }
  return 0;
}

template <typename Ctx>
int report_conjugate_out(const Common& c, const Ctx& ctx,
                         const std::vector<NormalForm<Ctx>>& family, int max_len,
                         const std::function<std::string(const NormalForm<Ctx>&)>& render) {
  auto res = conjugate_out(ctx, family, max_len);
  if (c.json_out) {
    json j;
    j["bound"] = res.bound;
    j["conjugator"] = res.success ? json(render(res.conjugator)) : json(nullptr);
    json steps = json::array();
    for (const auto& r : res.steps) steps.push_back(render(r));
    j["steps"] = steps;
    j["stuck_index"] = res.stuck_index;
    j["success"] = res.success;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "success: " << yesno(res.success) << "\n";
    std::cout << "steps: " << res.steps.size() << "\n";
    for (const auto& r : res.steps) std::cout << "  " << render(r) << "\n";
    if (res.success)
      std::cout << "conjugator: " << render(res.conjugator) << "\n";
    else
      std::cout << "stuck index: " << res.stuck_index << " (bound " << res.bound << ")\n";
  }
  return res.success ? 0 : 1;
}

int cmd_conjugate_out(const Common& c, const std::vector<std::string>& words, int max_len) {
  if (is_gamma(c)) {
    if (words.empty()) {
      std::cerr << "conjugate-out: give at least one generator word for --group gamma\n";
      return 2;
    }
    gamma::GammaContext ctx;
    std::vector<gamma::GammaNF> family;
    for (const std::string& w : words)
      family.push_back(gamma::normalize_word(ctx, gamma::parse_word(w)));
    return report_conjugate_out<gamma::GammaContext>(
        c, ctx, family, max_len, [](const gamma::GammaNF& x) { return gamma::nf_to_string(x); });
  }

  if (!words.empty()) {
    std::cerr << "conjugate-out: word arguments apply to --group gamma only; finite amalgams "
                 "use the whole subgroup\n";
    return 2;
  }
  auto spec = load_finite(c);
  finite::FiniteContext ctx(spec);
  std::vector<NormalForm<finite::FiniteContext>> family;
  for (int h = 1; h < spec.h_order(); ++h) family.push_back(nf_embed_h(ctx, h));
  return report_conjugate_out<finite::FiniteContext>(
      c, ctx, family, max_len,
      [&ctx](const NormalForm<finite::FiniteContext>& x) { return render_nf(ctx, x); });
}

int cmd_tree(const Common& c, int radius, const std::string& format) {
  if (is_gamma(c)) {
    gamma::GammaContext ctx;
    std::cout << export_ball(build_ball(ctx, radius), format);
    return 0;
  }
  auto spec = load_finite(c);
  finite::FiniteContext ctx(spec);
  std::cout << export_ball(build_ball(ctx, radius), format);
  return 0;
}

int cmd_selftest(const Common& c) {
  auto results = run_acceptance(c.seed, c.jobs);
  if (c.json_out) {
    json j = json::array();
    for (const CheckResult& r : results) {
      json e;
      e["detail"] = r.detail;
      e["name"] = r.name;
      e["number"] = r.number;
      e["pass"] = r.pass;
      j.push_back(e);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << format_acceptance(results);
  }
  return all_pass(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation in free products of groups with amalgamation"};
  app.require_subcommand(1);
  int rc = 0;

  Common c_reduce;
  std::string reduce_word;
  auto* sub_reduce = app.add_subcommand("reduce", "normalize a generator word");
  add_group_options(sub_reduce, c_reduce);
  add_json_option(sub_reduce, c_reduce);
  sub_reduce->add_option("word", reduce_word, "word in tokens g0, g1, h:<bits>")->required();
  sub_reduce->callback([&] { rc = cmd_reduce(c_reduce, reduce_word); });

  Common c_mul;
  std::string mul_a, mul_b;
  auto* sub_mul = app.add_subcommand("mul", "multiply two generator words");
  add_group_options(sub_mul, c_mul);
  add_json_option(sub_mul, c_mul);
  sub_mul->add_option("left", mul_a, "left word")->required();
  sub_mul->add_option("right", mul_b, "right word")->required();
  sub_mul->callback([&] { rc = cmd_mul(c_mul, mul_a, mul_b); });

  Common c_theta;
  std::string theta_word_text;
  auto* sub_theta = app.add_subcommand("theta", "sign character of a generator word");
  add_group_options(sub_theta, c_theta);
  add_json_option(sub_theta, c_theta);
  sub_theta->add_option("word", theta_word_text, "word in tokens g0, g1, h:<bits>")->required();
  sub_theta->callback([&] { rc = cmd_theta(c_theta, theta_word_text); });

  Common c_verify;
  auto* sub_verify =
      app.add_subcommand("verify-presentation", "check the defining relations exhaustively");
  add_json_option(sub_verify, c_verify);
  sub_verify->add_option("--seed", c_verify.seed, "random seed")->capture_default_str();
  sub_verify->callback([&] { rc = cmd_verify_presentation(c_verify); });

  Common c_kernel;
  int kernel_depth = 3, kernel_max_len = 6;
  auto* sub_kernel = app.add_subcommand("kernel", "kernel of the action on the coset tree");
  add_group_options(sub_kernel, c_kernel);
  add_json_option(sub_kernel, c_kernel);
  sub_kernel->add_option("--depth", kernel_depth, "truncation depth (gamma)")
      ->capture_default_str();
  sub_kernel->add_option("--max-len", kernel_max_len, "conjugator length bound (gamma)")
      ->capture_default_str();
  sub_kernel->callback([&] { rc = cmd_kernel(c_kernel, kernel_depth, kernel_max_len); });

  Common c_classify;
  int witness_bound = 4;
  auto* sub_classify =
      app.add_subcommand("classify", "kernel triviality and its equivalent conditions");
  add_group_options(sub_classify, c_classify);
  add_json_option(sub_classify, c_classify);
  sub_classify->add_option("--witness-bound", witness_bound, "conjugator witness search bound")
      ->capture_default_str();
  sub_classify->callback([&] { rc = cmd_classify(c_classify, witness_bound); });

  Common c_chain;
  int chain_j = 0, chain_depth = 3, chain_levels = 2;
  auto* sub_chain = app.add_subcommand("c-chain", "survivor counts of the conjugation filters");
  add_group_options(sub_chain, c_chain);
  add_json_option(sub_chain, c_chain);
  sub_chain->add_option("--j", chain_j, "factor side (gamma)")->capture_default_str();
  sub_chain->add_option("--depth", chain_depth, "truncation depth (gamma)")
      ->capture_default_str();
  sub_chain->add_option("--levels", chain_levels, "filter levels (gamma)")
      ->capture_default_str();
  sub_chain->callback([&] { rc = cmd_c_chain(c_chain, chain_j, chain_depth, chain_levels); });

  Common c_conj;
  std::vector<std::string> conj_words;
  int conj_max_len = 6;
  auto* sub_conj =
      app.add_subcommand("conjugate-out", "conjugate a family out of the amalgamated subgroup");
  add_group_options(sub_conj, c_conj);
  add_json_option(sub_conj, c_conj);
  sub_conj->add_option("--max-len", conj_max_len, "conjugator word length bound")
      ->capture_default_str();
  sub_conj->add_option("words", conj_words, "family of generator words (gamma)");
  sub_conj->callback([&] { rc = cmd_conjugate_out(c_conj, conj_words, conj_max_len); });

  Common c_tree;
  int tree_radius = 2;
  std::string tree_format = "dot";
  auto* sub_tree = app.add_subcommand("tree", "export a ball of the coset tree");
  add_group_options(sub_tree, c_tree);
  sub_tree->add_option("--radius", tree_radius, "ball radius")->capture_default_str();
  sub_tree->add_option("--format", tree_format, "dot or json")->capture_default_str();
  sub_tree->callback([&] { rc = cmd_tree(c_tree, tree_radius, tree_format); });

  Common c_self;
  auto* sub_self = app.add_subcommand("selftest", "run the end-to-end check suite");
  add_json_option(sub_self, c_self);
  sub_self->add_option("--seed", c_self.seed, "random seed")->capture_default_str();
  sub_self->add_option("--jobs", c_self.jobs, "run checks concurrently")->capture_default_str();
  sub_self->callback([&] { rc = cmd_selftest(c_self); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
