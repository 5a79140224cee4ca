#include "fjb/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fjb/errors.hpp"
#include "fjb/fjrep.hpp"
#include "fjb/kernels.hpp"
#include "fjb/packets.hpp"
#include "fjb/periods.hpp"

namespace fjb::cli {

namespace {

using nlohmann::json;
using numerics::HalfInt;
using geometry::Subgroup;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Subgroup parse_subgroup(const std::string& s) { return s == "g1" ? Subgroup::G1 : Subgroup::G2; }

numerics::QuadratureSpec spec_for(int nodes) {
  return nodes > 0 ? numerics::QuadratureSpec::with_nodes(nodes) : numerics::QuadratureSpec{};
}

json verdict_json(const periods::PeriodVerdict& v) {
  json j;
  j["subgroup"] = geometry::to_string(v.subgroup);
  j["p"] = v.p;
  j["q"] = v.q;
  j["lambda_x2"] = v.lambda.twice();
  j["target_x2"] = v.target.twice();
  j["converges"] = v.converges;
  j["target_valid"] = v.target_valid;
  j["parity_match"] = v.parity_match;
  j["a"] = v.a;
  j["target_degree_x2"] = v.target_degree.twice();
  j["value"] = v.value ? json(*v.value) : json(nullptr);
  j["err_est"] = v.err_est;
  j["threshold"] = v.threshold;
  j["nonzero"] = v.nonzero;
  j["predicate_nonzero"] = v.predicate_nonzero;
  j["witness_used"] = v.witness_used;
  j["witness_index"] = v.witness_index;
  const auto& f = v.factors;
  j["factors"] = {{"sphere", f.sphere},
                  {"pairing", f.pairing},
                  {"radial", f.radial},
                  {"radial_a_exp", f.radial_a_exp},
                  {"radial_c_exp", f.radial_c_exp},
                  {"norm_a", f.norm_a},
                  {"norm_target", f.norm_target}};
  return j;
}

// Positive target_x2 up to the bound whose harmonic degree is an integer.
std::vector<HalfInt> candidate_targets(int p, int q, Subgroup which, std::int64_t max_x2) {
  std::vector<HalfInt> out;
  for (std::int64_t t = 1; t <= max_x2; ++t) {
    const HalfInt h = HalfInt::from_twice(t);
    if (periods::target_degree(p, q, which, h).is_integer()) out.push_back(h);
  }
  return out;
}

int cmd_fj(int p, int q, std::int64_t lambda_x2, const std::string& space, int nodes, std::ostream& out) {
  const auto tag = space == "g1" ? fjrep::SpaceTag::G1_space
                   : space == "g2" ? fjrep::SpaceTag::G2_space
                                   : fjrep::SpaceTag::G_on_H;
  const auto param = fjrep::make_fj_param(p, q, HalfInt::from_twice(lambda_x2), tag);
  const auto norm = fjrep::l2_norm_sq(param, spec_for(nodes));
  json j;
  j["p"] = p;
  j["q"] = q;
  j["space"] = fjrep::to_string(tag);
  j["lambda_x2"] = lambda_x2;
  j["a"] = param.a;
  j["exponent_x2"] = param.exponent.twice();
  j["min_ktype_x2"] = param.min_ktype.twice();
  j["levi"] = param.levi;
  j["inf_char_x2"] = fjrep::inf_char(param).twice();
  std::vector<std::int64_t> hc;
  for (auto v : fjrep::harish_chandra_param(param)) hc.push_back(v.twice());
  j["harish_chandra_x2"] = hc;
  j["weyl_group"] = fjrep::weyl_group(param).name();
  j["self_dual"] = fjrep::is_self_dual(param);
  j["l2_norm_sq"] = norm.value;
  j["l2_err_est"] = norm.err_est;
  j["l2_factors"] = {{"sphere", norm.sphere}, {"zonal", norm.zonal}, {"radial", norm.radial}};
  j["decay_rate"] = fjrep::decay_rate(param);
  j["decay_constant"] = fjrep::decay_constant(param);
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_branch(int p, int q, std::int64_t lambda_x2, const std::string& subgroup, std::int64_t max_x2,
               const std::string& format, int nodes, bool zonal, std::ostream& out) {
  const Subgroup which = parse_subgroup(subgroup);
  const HalfInt lambda = HalfInt::from_twice(lambda_x2);
  fjrep::make_fj_param(p, q, lambda);
  const auto targets = candidate_targets(p, q, which, max_x2);
  const auto rows = kernels::scan_targets_omp(p, q, lambda, which, targets, spec_for(nodes), !zonal);
  if (format == "csv") {
    out << "p,q,lambda_x2,subgroup,target_x2,converges,nonzero,predicate,value,err,parity_match,target_degree,"
           "interlace,admissible\n";
    for (const auto& r : rows) {
      const auto& v = r.verdict;
      out << p << ',' << q << ',' << lambda_x2 << ',' << subgroup << ',' << v.target.twice() << ','
          << (v.converges ? "true" : "false") << ',' << (v.nonzero ? "true" : "false") << ','
          << (v.predicate_nonzero ? "true" : "false") << ',' << (v.value ? fmt_double(*v.value) : "") << ','
          << fmt_double(v.err_est) << ',' << (v.parity_match ? "true" : "false") << ',' << v.target_degree.str()
          << ',' << (r.interlace ? packets::to_string(*r.interlace) : "") << ','
          << (r.admissible ? "true" : "false") << '\n';
    }
    return kOk;
  }
  json j;
  j["p"] = p;
  j["q"] = q;
  j["lambda_x2"] = lambda_x2;
  j["subgroup"] = subgroup;
  j["rows"] = json::array();
  for (const auto& r : rows) {
    json row = verdict_json(r.verdict);
    row["interlace"] = r.interlace ? json(packets::to_string(*r.interlace)) : json(nullptr);
    row["admissible"] = r.admissible;
    j["rows"].push_back(row);
  }
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_period(int p, int q, std::int64_t lambda_x2, std::int64_t target_x2, const std::string& subgroup, int nodes,
               bool zonal, std::ostream& out) {
  const Subgroup which = parse_subgroup(subgroup);
  const HalfInt lambda = HalfInt::from_twice(lambda_x2);
  const HalfInt target = HalfInt::from_twice(target_x2);
  const auto spec = spec_for(nodes);
  const auto v = which == Subgroup::G1 ? periods::period_integral_G1(p, q, lambda, target, spec)
                                       : periods::period_integral_G2(p, q, lambda, target, spec, !zonal);
  json j = verdict_json(v);
  j["admissible_restriction"] = which == Subgroup::G1;
  out << j.dump(2) << '\n';
  return kOk;
}

json form_json(const packets::RealForm& f) { return json::array({f.p_sig, f.q_sig}); }

json pairs_json(const std::vector<packets::RelevantPair>& pairs) {
  json arr = json::array();
  for (const auto& pr : pairs) arr.push_back({{"sub", form_json(pr.sub)}, {"amb", form_json(pr.amb)}});
  return arr;
}

int cmd_packet(int p, int q, std::int64_t lambda_x2, bool inner_only, const std::string& format, std::ostream& out) {
  if (p < 0 || q < 0) throw InvalidParameter("signature entries must be non-negative");
  const packets::RealForm form{p, q};
  const auto drop_p = packets::relevant_pairs(form, packets::Direction::drop_p);
  const auto drop_q = packets::relevant_pairs(form, packets::Direction::drop_q);
  json j;
  if (!inner_only) {
    const auto packet = packets::arthur_packet(p, q, HalfInt::from_twice(lambda_x2));
    j["lambda_x2"] = lambda_x2;
    j["size"] = packet.size;
    j["coset_space_size"] = packet.cosets.coset_space_size;
    j["members"] = json::array();
    for (const auto& m : packet.members)
      j["members"].push_back({{"tag", m.tag}, {"levi", m.levi}, {"discrete_spectrum_of", m.discrete_spectrum_of}});
    j["double_coset_reps"] = json::array();
    for (const auto& r : packet.cosets.representatives) j["double_coset_reps"].push_back(r.images());
  }
  if (format == "csv") {
    out << "direction,sub_p,sub_q,amb_p,amb_q\n";
    for (const auto& [name, pairs] : {std::pair{"drop_p", &drop_p}, std::pair{"drop_q", &drop_q}})
      for (const auto& pr : *pairs)
        out << name << ',' << pr.sub.p_sig << ',' << pr.sub.q_sig << ',' << pr.amb.p_sig << ',' << pr.amb.q_sig
            << '\n';
    return kOk;
  }
  j["p"] = p;
  j["q"] = q;
  j["pure_inner_forms"] = json::array();
  for (const auto& f : packets::pure_inner_forms(form)) j["pure_inner_forms"].push_back(form_json(f));
  j["relevant_pairs"] = {{"drop_p", pairs_json(drop_p)}, {"drop_q", pairs_json(drop_q)}};
  out << j.dump(2) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Branching verdicts for Flensted-Jensen representations of SO0(p,q)", "fjbranch"};
  app.require_subcommand(1);

  int p = 0, q = 0, nodes = 0;
  std::int64_t lambda_x2 = 0, target_x2 = 0, max_target_x2 = 0;
  std::string subgroup = "g2", format = "json", space = "g_on_h", suite = "all", out_path;
  bool zonal = false, inner_only = false;
  std::uint64_t seed = 0;

  auto add_pq = [&](CLI::App* c) {
    c->add_option("--p", p, "signature p")->required();
    c->add_option("--q", q, "signature q")->required();
  };
  const auto groups = CLI::IsMember({"g1", "g2"});

  auto* fj = app.add_subcommand("fj", "Flensted-Jensen parameter report");
  add_pq(fj);
  fj->add_option("--lambda-x2", lambda_x2, "2 lambda")->required();
  fj->add_option("--space", space, "g_on_h (default), g1 or g2")->check(CLI::IsMember({"g_on_h", "g1", "g2"}));
  fj->add_option("--nodes", nodes, "quadrature nodes (radial and sphere)");

  auto* branch = app.add_subcommand("branch", "scan targets for one lambda");
  add_pq(branch);
  branch->add_option("--lambda-x2", lambda_x2, "2 lambda")->required();
  branch->add_option("--subgroup", subgroup, "g1 or g2")->required()->check(groups);
  branch->add_option("--max-target-x2", max_target_x2, "largest 2 mu (or 2 nu)")->required();
  branch->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  branch->add_option("--nodes", nodes, "quadrature nodes");
  branch->add_flag("--zonal", zonal, "use the zonal pairing instead of the witness scan");

  auto* period = app.add_subcommand("period", "one period integral");
  add_pq(period);
  period->add_option("--lambda-x2", lambda_x2, "2 lambda")->required();
  period->add_option("--target-x2", target_x2, "2 mu (g2) or 2 nu (g1)")->required();
  period->add_option("--subgroup", subgroup, "g1 or g2")->check(groups);
  period->add_option("--nodes", nodes, "quadrature nodes");
  period->add_flag("--zonal", zonal, "use the zonal pairing instead of the witness scan");

  auto* packet = app.add_subcommand("packet", "Arthur packet, pure inner forms, relevant pairs");
  add_pq(packet);
  packet->add_option("--lambda-x2", lambda_x2, "2 lambda (default 2)");
  packet->add_flag("--inner-forms-only", inner_only, "skip the double-coset data");
  packet->add_option("--format", format, "json or csv (relevant pairs)")->check(CLI::IsMember({"json", "csv"}));

  auto* check = app.add_subcommand("check", "run property suites");
  check->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_names()));
  check->add_option("--seed", seed, "seed for randomized properties");

  for (auto* c : {fj, branch, period, packet, check}) c->add_option("--out", out_path, "write the report here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidParameters;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "cannot open " << out_path << '\n';
      return kInvalidParameters;
    }
  }
  std::ostream& sink = out_path.empty() ? out : file;

  try {
    if (*fj) return cmd_fj(p, q, lambda_x2, space, nodes, sink);
    if (*branch) return cmd_branch(p, q, lambda_x2, subgroup, max_target_x2, format, nodes, zonal, sink);
    if (*period) return cmd_period(p, q, lambda_x2, target_x2, subgroup, nodes, zonal, sink);
    if (*packet) return cmd_packet(p, q, packet->count("--lambda-x2") ? lambda_x2 : 2, inner_only, format, sink);
    if (*check) return run_checks(suite, seed, sink);
  } catch (const DivergenceError& e) {
    err << "divergent: " << e.what() << " (lambda + target = " << e.exponent_sum() << ", threshold "
        << e.threshold() << ")\n";
    return kDivergent;
  } catch (const NotInGroup& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kInvalidParameters;
  } catch (const InvalidParameter& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kInvalidParameters;
  } catch (const DomainError& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kInvalidParameters;
  } catch (const ToleranceError& e) {
    err << "tolerance not met: " << e.what() << '\n';
    return kPropertyFailure;
  }
  return kInvalidParameters;
}

}  // namespace fjb::cli
