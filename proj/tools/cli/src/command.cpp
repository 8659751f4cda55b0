#include "invconn/cli/command.hpp"

#include <array>
#include <type_traits>
#include <variant>
#include <utility>

#include "invconn/cli/selftest.hpp"
#include "invconn/moduli.hpp"
#include "invconn/numerics.hpp"
#include "invconn/random.hpp"
#include "invconn/wang.hpp"

namespace invconn::cli {
namespace {

constexpr std::array<std::pair<Command, std::string_view>, 10> kNames{{
    {Command::Canonicalize, "canonicalize"},
    {Command::Chart, "chart"},
    {Command::Classify, "classify"},
    {Command::Equiv, "equiv"},
    {Command::SolveBasis, "solve-basis"},
    {Command::AxialCanonical, "axial-canonical"},
    {Command::Su2Modulus, "su2-modulus"},
    {Command::IsoModulus, "iso-modulus"},
    {Command::Sample, "sample"},
    {Command::Selftest, "selftest"},
}};

Json chart_json(const ChartPoint& p) { return {{"A", to_json(p.a.mat())}, {"lambda", p.lambda}}; }

Json canonical_json(const BianchiCanonical& c) {
  return {{"p_psd", to_json(c.p_psd.mat())}, {"sign", std::string(to_string(c.sign))}};
}

ChartPoint chart_from(const Json& p, const ToleranceConfig& cfg) {
  return ChartPoint::from(get_mat3(p, "A"), get_number(p, "lambda"), cfg);
}

AxialSign axial_sign(const Json& p) {
  if (!p.contains("sign")) return AxialSign::Plus;
  const std::string s = get_string(p, "sign");
  if (s == "+" || s == "plus") return AxialSign::Plus;
  if (s == "-" || s == "minus") return AxialSign::Minus;
  throw ParseError("field 'sign' must be \"plus\" or \"minus\"");
}

ResultRecord canonicalize(const Json& p, const ToleranceConfig& cfg) {
  const std::string kind = p.contains("case") ? get_string(p, "case") : "bianchi";
  const Mat3 m = get_mat3(p, "matrix");
  if (kind == "bianchi") return ResultRecord::success(canonical_json(bianchi_canonical(m, cfg)));
  if (kind == "axial") {
    const AxialModulus a = axial_canonical(m, cfg);
    return ResultRecord::success({{"a", a.a}, {"r", a.r}});
  }
  if (kind == "isotropic") {
    const double c = iso_modulus(m, cfg);
    return ResultRecord::success({{"c", c}});
  }
  throw ParseError("field 'case' must be one of bianchi, axial, isotropic");
}

ResultRecord chart(const Json& p, const ToleranceConfig& cfg) {
  if (p.contains("matrix")) {
    const BianchiCanonical c = bianchi_canonical(get_mat3(p, "matrix"), cfg);
    Json out = chart_json(bianchi_chart(c, cfg));
    out["sign"] = std::string(to_string(c.sign));
    return ResultRecord::success(std::move(out));
  }
  return ResultRecord::success(canonical_json(bianchi_chart_inv(chart_from(p, cfg), cfg)));
}

ResultRecord classify(const Json& p, const ToleranceConfig& cfg) {
  const ChartPoint pt =
      p.contains("matrix") ? bianchi_coordinates(get_mat3(p, "matrix"), cfg) : chart_from(p, cfg);
  const StratumReport rep = diagnose_stratum(pt, cfg);
  return ResultRecord::success(
      {{"stratum", rep.stratum.index}},
      {diag("discriminant", rep.discriminant), std::string("discriminant_s1=") + (rep.discriminant_s1 ? "true" : "false"),
       std::string("spectral_s1=") + (rep.spectral_s1 ? "true" : "false"),
       diag("mu0", rep.spectrum[0]), diag("mu1", rep.spectrum[1]), diag("mu2", rep.spectrum[2])});
}

ResultRecord equiv(const Json& p, const ToleranceConfig& cfg) {
  const Mat3 m = get_mat3(p, "M");
  const Mat3 n = get_mat3(p, "N");
  // Everything that can throw runs before the JSON literal is built.
  const ProcrustesResult pr = procrustes_align(m, n);
  const bool equivalent = bianchi_equiv(m, n, cfg);
  const double distance = chart_distance(bianchi_coordinates(m, cfg), bianchi_coordinates(n, cfg));
  return ResultRecord::success({
      {"equivalent", equivalent},
      {"distance", distance},
      {"procrustes", {{"rotation", to_json(pr.rotation.matrix())}, {"residual", pr.residual}}},
  });
}

ResultRecord solve_basis(const Json& p, const ToleranceConfig& cfg) {
  const std::string iso_name = get_string(p, "isotropy");
  IsotropyClass iso;
  if (iso_name == "bianchi") {
    iso = IsotropyClass::bianchi();
  } else if (iso_name == "axial") {
    iso = IsotropyClass::axial(axial_sign(p));
  } else if (iso_name == "isotropic") {
    iso = IsotropyClass::isotropic();
  } else {
    throw ParseError("field 'isotropy' must be one of bianchi, axial, isotropic");
  }
  const std::string lift_name = p.contains("lift") ? get_string(p, "lift") : "metric";
  LiftSpec lift;
  if (lift_name == "metric") {
    lift = LiftSpec::metric();
  } else if (lift_name == "su2") {
    lift = LiftSpec::su2(p.contains("n") ? get_int(p, "n") : 0);
  } else {
    throw ParseError("field 'lift' must be \"metric\" or \"su2\"");
  }
  const EquivariantBasis b = solve_equivariant_basis(iso, lift, cfg);
  Json basis = Json::array();
  for (const Mat3& e : b.basis) basis.push_back(to_json(e));
  std::vector<std::string> notes{"isotropy=" + describe(iso), "lift=" + describe(lift)};
  if (iso.kind == IsotropyClass::Kind::Axial && lift.flavor == LiftSpec::Flavor::SU2Lift &&
      lift.n == 0) {
    notes.emplace_back("note=trivial lift leaves the whole first column free");
  }
  return ResultRecord::success({{"dimension", b.dimension}, {"basis", std::move(basis)}},
                               std::move(notes));
}

ResultRecord axial(const Json& p, const ToleranceConfig& cfg) {
  const AxialModulus a = p.contains("matrix")
                             ? axial_canonical(get_mat3(p, "matrix"), cfg)
                             : axial_canonical(get_number(p, "a"), get_number(p, "b"), get_number(p, "c"));
  return ResultRecord::success({{"a", a.a}, {"r", a.r}});
}

ResultRecord su2_modulus(const Json& p, const ToleranceConfig& cfg) {
  const AxialSU2Modulus m = axial_su2_modulus(get_int(p, "n"), get_mat3(p, "matrix"), cfg);
  return ResultRecord::success({{"n", m.n}, {"c", m.c}});
}

ResultRecord iso(const Json& p, const ToleranceConfig& cfg) {
  const double c = iso_modulus(get_mat3(p, "matrix"), cfg);
  return ResultRecord::success({{"c", c}});
}

ResultRecord sample_cmd(const Json& p, std::uint64_t default_seed) {
  SampleKind kind;
  try {
    kind = parse_sample_kind(get_string(p, "kind"));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  const int count = get_int(p, "count");
  if (count < 0) throw ParseError("field 'count' must be nonnegative");
  std::uint64_t seed = default_seed;
  if (p.contains("seed")) {
    const Json& s = p["seed"];
    if (!s.is_number_integer() || (s.is_number_integer() && !s.is_number_unsigned() && s.get<std::int64_t>() < 0))
      throw ParseError("field 'seed' must be a nonnegative integer");
    seed = s.get<std::uint64_t>();
  }
  Json out = Json::array();
  std::visit(
      [&](const auto& items) {
        for (const auto& x : items) {
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, SO3Element>) {
            out.push_back(to_json(x.matrix()));
          } else {
            out.push_back(to_json(x));
          }
        }
      },
      sample(kind, seed, static_cast<std::size_t>(count)));
  return ResultRecord::success({{"kind", std::string(to_string(kind))}, {"seed", seed}, {"samples", std::move(out)}});
}

ResultRecord selftest_cmd(const Json& p, std::uint64_t seed) {
  const std::string scale_name = p.contains("scale") ? get_string(p, "scale") : "quick";
  const auto scale = parse_scale(scale_name);
  if (!scale) throw ParseError("field 'scale' must be \"quick\" or \"full\"");
  const SelftestReport rep = run_selftest(seed, *scale);
  Json suites = Json::array();
  std::vector<std::string> failing;
  for (const SuiteResult& s : rep.suites) {
    suites.push_back(s.to_json());
    if (!s.pass) failing.push_back(s.name);
  }
  Json data{{"scale", scale_name}, {"seed", seed}, {"passed", rep.passed()}, {"suites", std::move(suites)}};
  if (rep.passed()) return ResultRecord::success(std::move(data));
  std::string names;
  for (const auto& f : failing) names += (names.empty() ? "" : ",") + f;
  ResultRecord r = ResultRecord::error(Failure::Domain, "SuiteFailure", names);
  r.data["report"] = std::move(data);
  return r;
}

ResultRecord dispatch(const CommandRequest& req) {
  const Json& p = req.payload;
  if (!p.is_object()) throw ParseError("payload must be a JSON object");
  switch (req.command) {
    case Command::Canonicalize: return canonicalize(p, req.cfg);
    case Command::Chart: return chart(p, req.cfg);
    case Command::Classify: return classify(p, req.cfg);
    case Command::Equiv: return equiv(p, req.cfg);
    case Command::SolveBasis: return solve_basis(p, req.cfg);
    case Command::AxialCanonical: return axial(p, req.cfg);
    case Command::Su2Modulus: return su2_modulus(p, req.cfg);
    case Command::IsoModulus: return iso(p, req.cfg);
    case Command::Sample: return sample_cmd(p, req.seed);
    case Command::Selftest: return selftest_cmd(p, req.seed);
  }
  throw ParseError("unknown command");
}

}  // namespace

std::string_view to_string(Command c) noexcept {
  for (const auto& [cmd, name] : kNames) {
    if (cmd == c) return name;
  }
  return "unknown";
}

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [cmd, n] : kNames) {
    if (n == name) return cmd;
  }
  return std::nullopt;
}

const std::vector<Command>& all_commands() {
  static const std::vector<Command> cmds = [] {
    std::vector<Command> v;
    for (const auto& entry : kNames) v.push_back(entry.first);
    return v;
  }();
  return cmds;
}

std::string diag(std::string_view name, double value) {
  return std::string(name) + "=" + serialize(Json(value));
}

ResultRecord ResultRecord::success(Json data, std::vector<std::string> diagnostics) {
  return {Failure::None, std::move(data), std::move(diagnostics)};
}

ResultRecord ResultRecord::error(Failure kind, std::string code, std::string message,
                                 std::vector<std::string> diagnostics) {
  return {kind, Json{{"code", std::move(code)}, {"message", std::move(message)}}, std::move(diagnostics)};
}

Json ResultRecord::to_json() const {
  return {{"status", ok() ? "ok" : "error"}, {"data", data}, {"diagnostics", diagnostics}};
}

ResultRecord ResultRecord::from_json(const Json& j) {
  const std::string status = get_string(j, "status");
  const Json& data = require(j, "data");
  const Json& diags = require(j, "diagnostics");
  if (!data.is_object() || !diags.is_array()) throw ParseError("malformed result record");
  ResultRecord r;
  r.data = data;
  for (const Json& d : diags) {
    if (!d.is_string()) throw ParseError("diagnostics must be strings");
    r.diagnostics.push_back(d.get<std::string>());
  }
  if (status == "ok") {
    r.failure = Failure::None;
  } else if (status == "error") {
    r.failure = get_string(data, "code") == "ParseError" ? Failure::Parse : Failure::Domain;
  } else {
    throw ParseError("status must be \"ok\" or \"error\"");
  }
  return r;
}

ResultRecord execute(const CommandRequest& req) {
  try {
    req.cfg.validate();
    return dispatch(req);
  } catch (const ParseError& e) {
    return ResultRecord::error(Failure::Parse, "ParseError", e.what());
  } catch (const NotEquivariantError& e) {
    return ResultRecord::error(Failure::Domain, std::string(to_string(e.code())), e.what(),
                               {diag("residual", e.residual()), "witness=" + serialize(to_json(e.witness()))});
  } catch (const Error& e) {
    return ResultRecord::error(Failure::Domain, std::string(to_string(e.code())), e.what());
  } catch (const Json::exception& e) {
    return ResultRecord::error(Failure::Parse, "ParseError", e.what());
  }
}

}  // namespace invconn::cli
