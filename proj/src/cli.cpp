// Copyright 2026 The ellspread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ellspread/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ellspread/analysis.hpp"
#include "ellspread/errors.hpp"
#include "ellspread/io.hpp"
#include "ellspread/numtheory.hpp"

namespace ellspread::cli {

namespace {

using io::json;

void emit(const json& j, std::ostream& out, const std::string& path) {
  const auto text = j.dump(2) + "\n";
  out << text;
  if (!path.empty()) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParameterError("cannot open output file '" + path + "'");
    f << text;
  }
}

json read_json(const std::string& path) {
  if (path.empty()) throw ParameterError("--in is required");
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParameterError("cannot open input file '" + path + "'");
  try {
    return json::parse(f);
  } catch (const json::exception& ex) {
    throw ParameterError("'" + path + "' is not valid JSON: " + ex.what());
  }
}

unsigned require_m(const JobSpec& job) {
  if (job.m) return *job.m;
  if (!job.chain.empty()) return job.chain.front();
  throw ParameterError("--m (or --chain) is required");
}

int do_info(const JobSpec& job, std::ostream& out, std::ostream& err) {
  const auto ctx = FieldCtx::make(job.e, require_m(job), job.max_degree);
  json subfields = json::array();
  for (auto d : divisors(ctx->degree())) subfields.push_back(d);
  json j{{"context", io::context_to_json(*ctx)},
         {"degree", ctx->degree()},
         {"q", ctx->q()},
         {"circle_order", ctx->qm() + 1},
         {"theta0_exponent", ctx->qm() - 1},
         {"theta0_hex", io::hex_le(ctx->circle_generator().bits, ctx->degree())},
         {"subfield_degrees", subfields},
         {"default_chain", default_chain(ctx->m())}};
  if (job.census) {
    const FormCtx fc(CoordFrame::make(ctx));
    j["census"] = io::to_json(census_report(fc));
  }
  emit(j, out, job.output);
  err << "GF(2^" << ctx->degree() << "), q = " << ctx->q() << ", m = " << ctx->m() << "\n";
  return kExitOk;
}

int do_construct(const JobSpec& job, std::ostream& out, std::ostream& err) {
  const unsigned m = require_m(job);
  const auto ctx = FieldCtx::make(job.e, m, job.max_degree);
  const auto frame = CoordFrame::make(ctx);
  Spread s;
  if (job.kind == "desarguesian") {
    if (!job.chain.empty() || !job.zetas.empty()) {
      throw ParameterError("the desarguesian spread takes no --chain or --zetas");
    }
    s = desarguesian_spread(frame);
  } else {
    const auto kind = parse_spread_kind(job.kind);
    const auto chain = job.chain.empty() ? default_chain(m) : job.chain;
    TowerSpec tower(ctx, chain);
    auto zetas = job.zetas;
    if (zetas.empty()) zetas.assign(kind == SpreadKind::elliptic ? tower.n() - 1 : tower.n(), 1);
    s = orbit_spread(frame, SpreadParams(tower, zetas, kind));
  }
  emit(io::spread_to_json(s), out, job.output);
  err << "constructed " << to_string(s.kind) << " spread with " << s.members.size() << " members\n";
  return kExitOk;
}

int do_verify(const JobSpec& job, std::ostream& out, std::ostream& err) {
  const auto s = io::spread_from_json(read_json(job.input), job.max_degree);
  const FormCtx fc(s.frame);
  const auto report = verify_spread(fc, s, parse_verify_mode(job.mode));
  emit(io::to_json(report), out, job.output);
  err << (report.pass ? "PASS" : "FAIL") << ": " << report.member_count << " members, covered " << report.covered
      << " of " << report.expected << "\n";
  return report.pass ? kExitOk : kExitFail;
}

int do_restrict(const JobSpec& job, std::ostream& out, std::ostream& err) {
  auto s = io::spread_from_json(read_json(job.input), job.max_degree);
  const FormCtx fc(s.frame);
  const auto report = verify_spread(fc, s, VerifyMode::counting);
  s.verified = report.pass ? Verified::pass : Verified::fail;
  if (!report.pass) throw PreconditionError("input spread fails verification");
  const auto r = restrict_spread(fc, s);
  emit(io::spread_to_json(r), out, job.output);
  err << "restricted " << r.members.size() << " members to their singular vectors\n";
  return kExitOk;
}

int do_classify(const JobSpec& job, std::ostream& out, std::ostream& err) {
  const unsigned m = require_m(job);
  if (!job.chain.empty() && job.chain.front() != m) throw ParameterError("--chain must start at --m");
  const auto ctx = FieldCtx::make(job.e, m, job.max_degree);
  TowerSpec tower(ctx, job.chain.empty() ? default_chain(m) : job.chain);
  const auto r = classify_tower(tower);
  emit(io::to_json(r), out, job.output);
  err << r.class_count << " classes from " << r.tuple_count << " tuples; bound " << r.bound.num << "/" << r.bound.den
      << (r.advisory ? " (advisory)" : "") << "\n";
  return kExitOk;
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    switch (job.command) {
      case Command::info:
        return do_info(job, out, err);
      case Command::construct:
        return do_construct(job, out, err);
      case Command::verify:
        return do_verify(job, out, err);
      case Command::restrict:
        return do_restrict(job, out, err);
      case Command::classify:
        return do_classify(job, out, err);
    }
  } catch (const ResourceError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitResource;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitParameter;
  }
  return kExitParameter;
}

int main(int argc, char** argv) {
  CLI::App app{"Cyclic symplectic and elliptic spreads over binary field towers"};
  app.require_subcommand(1);
  JobSpec job;

  auto add_field = [&](CLI::App* sub, bool need_m) {
    auto* e = sub->add_option("--e", job.e, "q = 2^e")->check(CLI::PositiveNumber);
    auto* m = sub->add_option("--m", job.m, "odd degree of F over GF(q)");
    if (need_m) m->required();
    (void)e;
    sub->add_option("--max-degree", job.max_degree, "largest admitted D = 2em");
  };

  auto* info = app.add_subcommand("info", "field context metadata");
  add_field(info, true);
  info->add_flag("--census", job.census, "include an exhaustive singular-vector census");

  auto* construct = app.add_subcommand("construct", "build a spread");
  add_field(construct, true);
  construct->add_option("--chain", job.chain, "divisor chain m,...,1")->delimiter(',');
  construct->add_option("--zetas", job.zetas, "zeta exponents k_1,...")->delimiter(',');
  construct->add_option("--kind", job.kind, "elliptic | symplectic | desarguesian");
  construct->add_option("--out", job.output, "also write the spread here");

  auto* verify = app.add_subcommand("verify", "check the spread axioms");
  verify->add_option("--in", job.input, "spread file")->required();
  verify->add_option("--mode", job.mode, "counting | exhaustive");
  verify->add_option("--max-degree", job.max_degree, "largest admitted D = 2em");
  verify->add_option("--out", job.output, "also write the report here");

  auto* restrict_cmd = app.add_subcommand("restrict", "restrict a symplectic spread to singular vectors");
  restrict_cmd->add_option("--in", job.input, "symplectic spread file")->required();
  restrict_cmd->add_option("--max-degree", job.max_degree, "largest admitted D = 2em");
  restrict_cmd->add_option("--out", job.output, "also write the elliptic spread here");

  auto* classify = app.add_subcommand("classify", "count parameter classes for a tower");
  add_field(classify, false);
  classify->add_option("--chain", job.chain, "divisor chain m,...,1")->delimiter(',');
  classify->add_option("--out", job.output, "also write the catalog here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kExitParameter;
  }

  if (info->parsed()) job.command = Command::info;
  if (construct->parsed()) job.command = Command::construct;
  if (verify->parsed()) job.command = Command::verify;
  if (restrict_cmd->parsed()) job.command = Command::restrict;
  if (classify->parsed()) job.command = Command::classify;
  return run(job, std::cout, std::cerr);
}

}  // namespace ellspread::cli
