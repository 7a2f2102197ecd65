#include "fsing/cli.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>

#include "fsing/closures.hpp"
#include "fsing/errors.hpp"
#include "fsing/numinv.hpp"
#include "fsing/testideal.hpp"
#include "json.hpp"

namespace fsing {

namespace {

using json = nlohmann::ordered_json;

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string options_key(const CliOptions& o) {
  std::string s;
  auto add = [&](const char* k, const std::string& v) {
    s += k;
    s += '=';
    s += v;
    s += ';';
  };
  add("ideal", o.ideal);
  add("other", o.other);
  add("poly", o.poly);
  add("map", o.map);
  add("at", o.at);
  add("c", o.c);
  add("order", o.order);
  add("e", o.e ? std::to_string(*o.e) : "");
  add("emax", o.emax ? std::to_string(*o.emax) : "");
  add("t", o.t.value_or(""));
  add("tmax", o.tmax.value_or(""));
  add("tolerance", o.tolerance.value_or(""));
  add("denom", o.denom ? std::to_string(*o.denom) : "");
  add("m", o.m ? std::to_string(*o.m) : "");
  add("round", o.round_up_q ? "q" : "q-1");
  return s;
}

json rational_json(const Rational& r) { return json{{"fraction", fraction_string(r)}, {"decimal", decimal_string(r)}}; }

json ideal_json(const Ideal& I) { return I.canonical_strings(); }

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) throw Error(ErrorKind::InvalidArgument, std::string("missing required option --") + flag);
  return value;
}

template <class T>
const T& need(const std::optional<T>& value, const char* flag) {
  if (!value) throw Error(ErrorKind::InvalidArgument, std::string("missing required option --") + flag);
  return *value;
}

MonomialOrder order_named(const std::string& name) {
  if (name == "degrevlex") return MonomialOrder::degrevlex();
  if (name == "lex") return MonomialOrder::lex();
  throw Error(ErrorKind::InvalidArgument, "unknown monomial order '" + name + "' (degrevlex or lex)");
}

json estimate_json(const InvariantEstimate& est) {
  json levels = json::array();
  for (const InvariantLevel& l : est.levels)
    levels.push_back(json{{"e", l.e}, {"count", l.count}, {"ratio", rational_json(l.ratio)}});
  json counts = json::array();
  for (const InvariantLevel& l : est.levels) counts.push_back(l.count);
  return json{{"dimension", est.dimension},
              {"counts", counts},
              {"levels", levels},
              {"limit_estimate", rational_json(est.limit_estimate)}};
}

json verdict_json(const ClosureVerdict& v) {
  json out{{"status", std::string(to_string(v.status))}, {"e", v.e}};
  out["multiplier"] = v.multiplier ? json(v.multiplier->to_string()) : json(nullptr);
  out["bounded_evidence"] = v.bounded_evidence;
  out["detail"] = v.detail;
  return out;
}

struct Computed {
  json outputs = json::object();
  json flags = json::object();
  int exit_code = 0;
};

using Handler = std::function<Computed(const Session&, const CliOptions&, std::vector<std::string>&)>;

Computed tau_computed(const TauResult& r) {
  Computed c;
  c.outputs["ideal"] = ideal_json(r.ideal);
  c.outputs["levels_used"] = r.levels_used;
  c.flags["stabilized"] = r.stabilized;
  c.exit_code = r.stabilized ? 0 : 2;
  return c;
}

TauOptions tau_options(const CliOptions& o) {
  TauOptions t;
  if (o.emax) t.max_levels = *o.emax;
  t.rounding = o.round_up_q ? Rounding::TimesQ : Rounding::TimesQMinusOne;
  t.threads = o.threads;
  return t;
}

int budget_e_max(const Session& s, const CliOptions& o, std::size_t d, std::vector<std::string>& warnings) {
  const std::uint32_t p = s.ring->characteristic();
  if (!o.emax) return default_e_max(p, d);
  if (*o.emax < 1) throw Error(ErrorKind::InvalidArgument, "--emax must be at least 1");
  if (exceeds_budget(p, d, *o.emax))
    warnings.push_back("warning: p^(e d) exceeds the 10^7 standard-monomial budget; expect heavy memory use");
  return *o.emax;
}

Rational tolerance_of(const CliOptions& o) { return o.tolerance ? parse_rational(*o.tolerance) : Rational(1, 100); }

Ideal ideal_or_maximal(const Session& s, const std::string& name) {
  return name.empty() ? Ideal::maximal(s.ring) : s.ideal(name);
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"gb",
       [](const Session& s, const CliOptions& o, auto&) {
         Computed c;
         Ideal I = s.context().lift(s.ideal(need(o.ideal, "ideal")));
         const auto& basis = I.groebner(order_named(o.order));
         json arr = json::array();
         for (auto it = basis.rbegin(); it != basis.rend(); ++it) arr.push_back(it->to_string());
         c.outputs["order"] = o.order;
         c.outputs["basis"] = arr;
         return c;
       }},
      {"member",
       [](const Session& s, const CliOptions& o, auto&) {
         Computed c;
         c.outputs["member"] = member(s.poly(need(o.poly, "poly")), s.context().lift(s.ideal(need(o.ideal, "ideal"))));
         return c;
       }},
      {"colon",
       [](const Session& s, const CliOptions& o, auto&) {
         Computed c;
         RingCtx R = s.context();
         c.outputs["ideal"] = ideal_json(colon(R.lift(s.ideal(need(o.ideal, "ideal"))), s.ideal(need(o.other, "other"))));
         return c;
       }},
      {"intersect",
       [](const Session& s, const CliOptions& o, auto&) {
         Computed c;
         RingCtx R = s.context();
         c.outputs["ideal"] =
             ideal_json(intersect(R.lift(s.ideal(need(o.ideal, "ideal"))), R.lift(s.ideal(need(o.other, "other")))));
         return c;
       }},
      {"length",
       [](const Session& s, const CliOptions& o, auto&) {
         Computed c;
         c.outputs["length"] = vspace_length(s.context().lift(s.ideal(need(o.ideal, "ideal"))));
         return c;
       }},
      {"dim",
       [](const Session& s, const CliOptions& o, auto&) {
         Computed c;
         RingCtx R = s.context();
         if (o.ideal.empty()) {
           c.outputs["dim"] = krull_dim(R);
         } else {
           Ideal I = R.lift(s.ideal(o.ideal));
           c.outputs["dim"] = I.is_unit() ? json(nullptr) : json(krull_dim(RingCtx(s.ring, I)));
         }
         return c;
       }},
      {"bracket",
       [](const Session& s, const CliOptions& o, auto&) {
         Computed c;
         c.outputs["ideal"] = ideal_json(s.context().lift(bracket_power(s.ideal(need(o.ideal, "ideal")), need(o.e, "e"))));
         return c;
       }},
      {"root",
       [](const Session& s, const CliOptions& o, auto&) {
         Computed c;
         c.outputs["ideal"] = ideal_json(eth_root(s.context(), s.ideal(need(o.ideal, "ideal")), need(o.e, "e")));
         return c;
       }},
      {"fedder",
       [](const Session& s, const CliOptions& o, auto&) {
         Computed c;
         Ideal J = s.ideal(o.ideal.empty() ? "quotient" : o.ideal);
         c.outputs["fpure"] = fedder_is_fpure(J, ideal_or_maximal(s, o.at));
         return c;
       }},
      {"ie",
       [](const Session& s, const CliOptions& o, auto&) {
         Computed c;
         Ideal Ie = splitting_ideal_Ie(s.context(), need(o.e, "e"));
         c.outputs["ideal"] = ideal_json(Ie);
         c.outputs["length"] = vspace_length(Ie);
         return c;
       }},
      {"tau-map",
       [](const Session& s, const CliOptions& o, auto&) {
         std::optional<Poly> start;
         if (!o.c.empty()) start = s.poly(o.c);
         return tau_computed(tau_map_pair(s.map(need(o.map, "map")), start));
       }},
      {"tau-ring",
       [](const Session& s, const CliOptions& o, auto&) {
         std::optional<Poly> start;
         if (!o.c.empty()) start = s.poly(o.c);
         return tau_computed(tau_hypersurface(s.context(), start));
       }},
      {"tau-pair",
       [](const Session& s, const CliOptions& o, auto&) {
         PairAt pair(s.context(), s.ideal(need(o.ideal, "ideal")), parse_rational(need(o.t, "t")));
         Computed c = tau_computed(tau_ideal_regular(pair, tau_options(o)));
         c.outputs["t"] = rational_json(pair.t());
         return c;
       }},
      {"nu",
       [](const Session& s, const CliOptions& o, auto&) {
         Computed c;
         const int e = need(o.e, "e");
         c.outputs["q"] = frobenius_exponent(s.ring->characteristic(), e);
         c.outputs["nu"] = nu_value(s.poly(need(o.poly, "poly")), e, ideal_or_maximal(s, o.at));
         return c;
       }},
      {"fpt",
       [](const Session& s, const CliOptions& o, auto&) {
         Computed c;
         FptBounds b = fpt_bounds(s.poly(need(o.poly, "poly")), o.emax.value_or(3));
         c.outputs["nus"] = b.nus;
         c.outputs["lower_exclusive"] = rational_json(b.lower);
         c.outputs["upper_inclusive"] = rational_json(b.upper);
         return c;
       }},
      {"jumps",
       [](const Session& s, const CliOptions& o, auto&) {
         Computed c;
         JumpCandidates j = jumping_numbers_grid(s.context(), s.ideal(need(o.ideal, "ideal")),
                                                 parse_rational(need(o.tmax, "tmax")), need(o.denom, "denom"),
                                                 tau_options(o));
         json vals = json::array();
         for (const Rational& r : j.values) vals.push_back(rational_json(r));
         c.outputs["candidates"] = vals;
         c.outputs["resolution"] = fraction_string(j.resolution);
         c.flags["stabilized"] = j.stabilized;
         c.exit_code = j.stabilized ? 0 : 2;
         return c;
       }},
      {"sfr",
       [](const Session& s, const CliOptions&, auto&) {
         Computed c;
         c.outputs["strongly_f_regular"] = is_strongly_f_regular(s.context());
         return c;
       }},
      {"hk",
       [](const Session& s, const CliOptions& o, std::vector<std::string>& warnings) {
         Computed c;
         RingCtx R = s.context();
         const int e_max = budget_e_max(s, o, krull_dim(R), warnings);
         InvariantEstimate est =
             hk_sequence(R, ideal_or_maximal(s, o.ideal), e_max, tolerance_of(o), o.threads);
         c.outputs = estimate_json(est);
         c.flags["converged_hint"] = est.converged_hint;
         return c;
       }},
      {"fsig",
       [](const Session& s, const CliOptions& o, std::vector<std::string>& warnings) {
         Computed c;
         RingCtx R = s.context();
         const int e_max = budget_e_max(s, o, krull_dim(R), warnings);
         InvariantEstimate est = fsig_sequence(R, e_max, tolerance_of(o), o.threads);
         c.outputs = estimate_json(est);
         c.flags["converged_hint"] = est.converged_hint;
         return c;
       }},
      {"splitprime",
       [](const Session& s, const CliOptions& o, std::vector<std::string>& warnings) {
         Computed c;
         RingCtx R = s.context();
         const int e_max = o.emax ? budget_e_max(s, o, krull_dim(R), warnings) : 3;
         SplittingPrimeResult r = splitting_prime_approx(R, e_max, o.threads);
         c.outputs["ideal"] = ideal_json(r.ideal);
         c.outputs["levels_used"] = r.levels_used;
         c.flags["certified"] = r.certified;
         c.exit_code = r.certified ? 0 : 2;
         return c;
       }},
      {"fclosure",
       [](const Session& s, const CliOptions& o, auto&) {
         Computed c;
         ClosureVerdict v = frobenius_closure_test(s.context(), s.poly(need(o.poly, "poly")),
                                                   s.ideal(need(o.ideal, "ideal")), o.emax.value_or(3));
         c.outputs["verdict"] = verdict_json(v);
         c.exit_code = v.status == ClosureStatus::Inconclusive ? 3 : 0;
         return c;
       }},
      {"tc-witness",
       [](const Session& s, const CliOptions& o, auto&) {
         Computed c;
         ClosureVerdict v = tight_closure_witness(s.context(), s.poly(need(o.poly, "poly")),
                                                  s.ideal(need(o.ideal, "ideal")), s.poly(need(o.c, "c")),
                                                  o.emax.value_or(3));
         c.outputs["verdict"] = verdict_json(v);
         c.exit_code = v.status == ClosureStatus::Inconclusive ? 3 : 0;
         return c;
       }},
      {"intclosure",
       [](const Session& s, const CliOptions& o, auto&) {
         Computed c;
         c.outputs["ideal"] = ideal_json(monomial_integral_closure(s.ideal(need(o.ideal, "ideal"))));
         return c;
       }},
      {"bs-check",
       [](const Session& s, const CliOptions& o, auto&) {
         Computed c;
         c.outputs["holds"] = briancon_skoda_check(s.ideal(need(o.ideal, "ideal")), need(o.m, "m"));
         return c;
       }},
  };
  return table;
}

void render_value(std::string& out, const std::string& key, const json& v) {
  out += key + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
}

std::string render(const json& envelope, bool as_json) {
  if (as_json) return envelope.dump(2) + "\n";
  std::string out;
  if (envelope.contains("error")) {
    const json& err = envelope["error"];
    out += "error: " + err["kind"].get<std::string>() + ": " + err["message"].get<std::string>() + "\n";
    return out;
  }
  out += "command: " + envelope["command"].get<std::string>() + "\n";
  for (const auto& [k, v] : envelope["outputs"].items()) render_value(out, k, v);
  for (const auto& [k, v] : envelope["flags"].items()) render_value(out, k, v);
  if (envelope.contains("timing")) render_value(out, "seconds", envelope["timing"]["seconds"]);
  return out;
}

RunOutcome error_outcome(const std::string& command, const Error& err, const CliOptions& options) {
  json e{{"kind", std::string(to_string(err.kind()))}, {"message", err.what()}};
  if (auto* pe = dynamic_cast<const ParseError*>(&err)) {
    e["line"] = pe->line();
    e["column"] = pe->column();
  }
  json envelope{{"command", command}, {"error", e}};
  return RunOutcome{1, render(envelope, options.json), {}};
}

}  // namespace

const std::vector<std::string>& cli_commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, h] : handlers()) v.push_back(name);
    return v;
  }();
  return names;
}

RunOutcome run_command(const std::string& command, const Session& session, const CliOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  auto it = handlers().find(command);
  if (it == handlers().end())
    return error_outcome(command, Error(ErrorKind::InvalidArgument, "unknown subcommand '" + command + "'"), options);
  RunOutcome outcome;
  try {
    Computed c = it->second(session, options, outcome.warnings);
    json envelope;
    envelope["command"] = command;
    envelope["inputs_digest"] =
        "fnv1a64:" + hex64(fnv1a(print_session(session) + '\0' + command + '\0' + options_key(options)));
    envelope["outputs"] = c.outputs;
    envelope["flags"] = c.flags;
    if (options.timing) {
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      envelope["timing"] = json{{"seconds", secs}};
    }
    outcome.exit_code = c.exit_code;
    outcome.output = render(envelope, options.json);
  } catch (const Error& err) {
    RunOutcome failed = error_outcome(command, err, options);
    failed.warnings = std::move(outcome.warnings);
    return failed;
  } catch (const std::bad_alloc&) {
    return error_outcome(command, Error(ErrorKind::InvalidArgument, "out of memory"), options);
  }
  return outcome;
}

RunOutcome run_command_text(const std::string& command, const std::string& session_text, const CliOptions& options) {
  try {
    Session s = parse_session(session_text);
    return run_command(command, s, options);
  } catch (const Error& err) {
    return error_outcome(command, err, options);
  }
}

RunOutcome run_command_file(const std::string& command, const std::string& path, const CliOptions& options) {
  try {
    Session s = load_session(path);
    return run_command(command, s, options);
  } catch (const Error& err) {
    return error_outcome(command, err, options);
  }
}

}  // namespace fsing
