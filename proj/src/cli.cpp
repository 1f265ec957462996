#include "synlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "synlab/errors.hpp"
#include "synlab/galois.hpp"
#include "synlab/instances.hpp"
#include "synlab/io.hpp"
#include "synlab/lifting.hpp"
#include "synlab/oracle.hpp"

namespace synlab {

namespace {

using nlohmann::json;

struct Options {
  std::string in, out, repr, seed = "0xC0FFEE", via, structure, target, direction, category, name;
  std::size_t candidates = kDefaultCandidates;
  int max_carrier = 2;
  bool force = false;
};

std::uint64_t parse_seed(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used, 0);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("--seed expects an integer (decimal or 0x-prefixed hex), got " + s);
  }
}

CertifyOptions certify_options(const Options& o) {
  CertifyOptions c;
  c.enumeration = EnumOptions{o.max_carrier, o.force};
  c.adversarial = AdversarialOptions{parse_seed(o.seed), o.candidates};
  if (o.max_carrier < 0 || o.max_carrier > 3) throw InputError("--max-carrier must lie in 0..3");
  if (o.max_carrier == 3 && !o.force) throw InputError("--max-carrier 3 needs --force");
  return c;
}

Document load(const Options& o) {
  if (o.in.empty()) throw InputError("--in is required");
  return load_document_file(o.in);
}

// Output sink: text to the terminal, canonical JSON to --out.
struct Sink {
  std::ostream& out;
  const Options& opts;

  void finish(const json& report) const {
    if (opts.out.empty()) return;
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + opts.out);
    f << canonical_dump(report);
  }
};

std::string relation_text(const Relation& r) {
  const Mask full = full_mask(r.carrier());
  std::string out;
  for (Mask m = 0; m <= full; ++m) {
    std::vector<Mask> minimal;
    for (Mask n = 0; n <= full; ++n) {
      if (!r.test(m, n)) continue;
      bool min = true;
      for (Mask k = 0; min && k <= full; ++k) min = !(k != n && is_subset(k, n) && r.test(m, k));
      if (min) minimal.push_back(n);
    }
    out += "    " + format_subset(m) + " < ";
    if (minimal.empty()) out += "(nothing)";
    for (std::size_t i = 0; i < minimal.size(); ++i) out += (i ? " | " : "") + format_subset(minimal[i]) + "...";
    out += "\n";
  }
  return out;
}

std::string endomap_text(const EndoMap& u) {
  std::string out = "    ";
  for (Mask m = 0; m < u.size(); ++m) out += (m ? ", " : "") + format_subset(m) + " -> " + format_subset(u(m));
  return out + "\n";
}

std::string structure_text(const Structure& s) {
  const auto& C = *structure_category(s);
  std::string out = std::string(kind_name(s)) + " " + structure_id(s) + " on " + C.id() + "\n";
  for (int x = 0; x < C.object_count(); ++x) {
    out += "  " + C.object(x).id + ":\n";
    if (const auto* c = std::get_if<ClosureOp>(&s)) out += endomap_text(c->at(x));
    else if (const auto* t = std::get_if<TopogenousOrder>(&s)) out += relation_text(t->at(x));
    else if (const auto* b = std::get_if<QUBase>(&s)) {
      for (std::size_t i = 0; i < b->at(x).size(); ++i)
        out += "   member " + std::to_string(i) + ":\n" + endomap_text(b->at(x)[i]);
    } else {
      const auto& fam = std::get<Syntop>(s).at(x);
      for (std::size_t i = 0; i < fam.size(); ++i) out += "   member " + std::to_string(i) + ":\n" + relation_text(fam[i]);
    }
  }
  return out;
}

const char* kind_of_repr(const std::string& repr) {
  if (repr == "closure") return "closure";
  if (repr == "topogenous") return "topogenous";
  if (repr == "qubase" || repr == "base") return "qubase";
  if (repr == "syntop" || repr == "syntopogenous") return "syntop";
  throw InputError("unknown --repr " + repr + " (syntop, qubase, closure, topogenous)");
}

std::vector<Structure> all_structures(const Document& d) {
  std::vector<Structure> out;
  for (const auto& s : d.closures) out.emplace_back(s);
  for (const auto& s : d.topogenous) out.emplace_back(s);
  for (const auto& s : d.qubases) out.emplace_back(s);
  for (const auto& s : d.syntops) out.emplace_back(s);
  return out;
}

// First structure matching the given id / kind / category; any filter may be empty.
std::optional<Structure> find_structure(const Document& d, const std::string& id, const std::string& repr,
                                        const CategoryPtr& category) {
  const std::string kind = repr.empty() ? "" : kind_of_repr(repr);
  for (auto& s : all_structures(d)) {
    if (!id.empty() && structure_id(s) != id) continue;
    if (!kind.empty() && kind != kind_name(s)) continue;
    if (category && structure_category(s) != category) continue;
    return s;
  }
  return std::nullopt;
}

Transformation find_transformation(const Document& d, const std::string& family, const std::string& via) {
  auto pick = [&](const auto& list, const char* what) -> Transformation {
    for (const auto& t : list)
      if (via.empty() || t.id == via) return t;
    throw InputError(via.empty() ? std::string("the instance has no ") + what
                                 : std::string("no ") + what + " with id " + via);
  };
  if (family == "pointed") return pick(d.pointed, "pointed endofunctor");
  if (family == "copointed") return pick(d.copointed, "copointed endofunctor");
  if (family == "fibration") return pick(d.fibrations, "fibration");
  if (family == "adjoint") return pick(d.adjunctions, "adjunction");
  throw InputError("unknown lift family " + family + " (pointed, copointed, fibration, adjoint)");
}

Structure lift_input(const Document& d, const Transformation& t, const Options& o) {
  if (o.repr.empty()) throw InputError("--repr is required (syntop, qubase, closure)");
  const auto C = lift_input_category(t);
  if (auto s = find_structure(d, o.structure, o.repr, C)) return *s;
  throw InputError(std::string("no ") + kind_of_repr(o.repr) + (o.structure.empty() ? "" : " " + o.structure) +
                   " on category " + C->id());
}

json base_report(const std::string& command) { return json{{"command", command}}; }

int verdict(bool ok, json& report) {
  report["verdict"] = ok ? "PASS" : "FAIL";
  return ok ? kExitPass : kExitCheckFailed;
}

// --------------------------------------------------------------------------

int cmd_validate(const Options& o, const Sink& sink) {
  const Document d = load(o);
  json report = base_report("validate");
  json items = json::array();
  bool ok = true;
  for (const auto& c : d.categories) {
    const Report r = validate_category(*c);
    items.push_back(r.to_json());
    sink.out << r.to_text();
    if (!r.ok()) {
      report["reports"] = items;
      report["verdict"] = "INPUT ERROR";
      sink.finish(report);
      const Check* f = r.first_failure();
      throw InputError("category " + c->id() + " violates " + f->name + ": " + f->witness);
    }
  }
  auto add = [&](const Report& r) {
    items.push_back(r.to_json());
    sink.out << r.to_text();
    ok = ok && r.ok();
  };
  for (const auto& f : d.functors) add(validate_functor(f));
  for (const auto& n : d.nats) add(validate_nat(n));
  for (const auto& p : d.pointed) add(validate_pointed(p));
  for (const auto& q : d.copointed) add(validate_copointed(q));
  for (const auto& a : d.adjunctions) add(validate_adjunction(a));
  for (const auto& f : d.fibrations) add(validate_fibration(f));
  for (const auto& s : all_structures(d)) add(validate(s));
  report["reports"] = items;
  const int code = verdict(ok, report);
  sink.out << "verdict: " << report["verdict"].get<std::string>() << "\n";
  sink.finish(report);
  return code;
}

int cmd_galois(const Options& o, const Sink& sink) {
  const Document d = load(o);
  json report = base_report("galois");
  json results = json::array();
  bool ok = true;
  const std::string kind = o.repr.empty() ? "" : kind_of_repr(o.repr);
  for (const auto& s : all_structures(d)) {
    if (!o.structure.empty() && structure_id(s) != o.structure) continue;
    if (!kind.empty() && kind != kind_name(s)) continue;
    Report r(std::string("galois translation of ") + kind_name(s) + " " + structure_id(s) + " on " +
             structure_category(s)->id());
    json entry{{"input", structure_id(s)}, {"kind", kind_name(s)}, {"category", structure_category(s)->id()}};
    try {
      if (const auto* c = std::get_if<ClosureOp>(&s)) {
        const auto t = topogenous_of_closure(*c);
        entry["formula"] = "m < n iff c(m) within n";
        entry["output"] = to_json(Structure(t));
        r.note("round trip c -> t -> c is the identity", closure_of_topogenous(t).tables == c->tables);
        r.note("meet-preserving image", is_meet_preserving(t));
        r.note("idempotent iff interpolative", is_idempotent(*c) == is_interpolative(t));
      } else if (const auto* t = std::get_if<TopogenousOrder>(&s)) {
        const auto c = closure_of_topogenous(*t);
        entry["formula"] = "c(m) = meet of {p : m < p}";
        entry["output"] = to_json(Structure(c));
        r.note("round trip t -> c -> t is the identity", topogenous_of_closure(c).relations == t->relations);
        r.note("interpolative iff idempotent", is_interpolative(*t) == is_idempotent(c));
      } else if (const auto* b = std::get_if<QUBase>(&s)) {
        const auto sy = syntop_of_qubase(*b);
        entry["formula"] = "m <_U n iff U(m) within n";
        entry["output"] = to_json(Structure(sy));
        r.note("round trip B -> S -> B is filter-equal", compare(qubase_of_syntop(sy), *b) == Ordering::equal);
        r.note("image co-perfect", is_coperfect(sy));
      } else {
        const auto& sy = std::get<Syntop>(s);
        const auto base = qubase_of_syntop(sy);
        entry["formula"] = "U^<(m) = meet of {n : m < n}";
        entry["output"] = to_json(Structure(base));
        const auto back = syntop_of_qubase(base);
        bool same_union = true;
        for (int x = 0; x < sy.category->object_count(); ++x)
          same_union = same_union && back.union_at(x) == sy.union_at(x);
        r.note("round trip S -> B -> S keeps the union relation", same_union);
      }
    } catch (const Refused& e) {
      r.note("translation admissible", false, e.what());
    }
    sink.out << r.to_text();
    entry["checks"] = r.to_json();
    results.push_back(entry);
    ok = ok && r.ok();
  }
  if (results.empty()) throw InputError("no structure matched");
  report["results"] = results;
  const int code = verdict(ok, report);
  sink.out << "verdict: " << report["verdict"].get<std::string>() << "\n";
  sink.finish(report);
  return code;
}

// Property checklist for one lift.
Report lift_checks(const Transformation& t, const Structure& input, const Structure& lifted) {
  Report r("lift checks");
  const Report validity = validate(lifted);
  r.note("lifted structure valid", validity.ok(),
         validity.first_failure() ? validity.first_failure()->name + ": " + validity.first_failure()->witness : "");
  const auto w = designated_continuity_witness(t, input, lifted);
  r.note("designated maps continuous", w.empty(), w);
  auto preserved = [&](const std::string& name, bool in, bool out) {
    r.note(name, !in || out, in && !out ? "input has the property, output lacks it" : "");
  };
  if (const auto* c = std::get_if<ClosureOp>(&input))
    preserved("idempotent preserved", is_idempotent(*c), is_idempotent(std::get<ClosureOp>(lifted)));
  if (const auto* b = std::get_if<QUBase>(&input))
    preserved("transitive preserved", is_transitive_base(*b), is_transitive_base(std::get<QUBase>(lifted)));
  if (const auto* s = std::get_if<Syntop>(&input)) {
    const auto& l = std::get<Syntop>(lifted);
    preserved("interpolative preserved", is_interpolative(*s), is_interpolative(l));
    preserved("co-perfect preserved", is_coperfect(*s), is_coperfect(l));
  }
  if (const auto* fd = std::get_if<FibrationData>(&t)) {
    const auto& A = *fd->functor.source;
    for (int f : fd->initial) {
      bool initial = true;
      if (const auto* b = std::get_if<QUBase>(&lifted)) initial = is_initial(*b, f);
      else if (const auto* s = std::get_if<Syntop>(&lifted)) initial = is_initial(*s, f);
      r.note("initial morphisms stay initial", initial, "morphism " + A.morphism(f).id);
    }
  }
  return r;
}

int cmd_lift(const Options& o, const Sink& sink, const std::string& family) {
  const Document d = load(o);
  const Transformation t = find_transformation(d, family, o.via);
  const Structure input = lift_input(d, t, o);
  const auto opts = certify_options(o);
  json report = base_report("lift");
  report["family"] = family;
  report["transformation"] = transformation_id(t);
  report["input"] = structure_id(input);
  report["repr"] = kind_name(input);
  report["formula"] = lift_formula(t, input);
  const Structure lifted = lift(input, t);
  report["lifted"] = to_json(lifted);
  const Report checks = lift_checks(t, input, lifted);
  report["checks"] = checks.to_json();
  const auto direction = o.direction.empty() ? claimed_extremal(t, input) : parse_extremal(o.direction);
  const Certificate cert = certify_lift(input, t, opts, direction);
  report["certificate"] = cert.to_json();
  sink.out << family << " lift of " << kind_name(input) << " " << structure_id(input) << " along "
           << transformation_id(t) << "\n";
  sink.out << "formula: " << lift_formula(t, input) << "\n";
  sink.out << structure_text(lifted) << checks.to_text() << cert.to_text();
  const int code = verdict(checks.ok() && cert.pass, report);
  sink.out << "verdict: " << report["verdict"].get<std::string>() << "\n";
  sink.finish(report);
  return code;
}

int cmd_oracle_enumerate(const Options& o, const Sink& sink) {
  const Document d = load(o);
  if (o.repr.empty()) throw InputError("--repr is required (closure, topogenous, qubase, syntop)");
  const auto opts = EnumOptions{o.max_carrier, o.force};
  json report = base_report("oracle enumerate");
  json results = json::array();
  for (const auto& c : d.categories) {
    if (!o.category.empty() && c->id() != o.category) continue;
    const auto found = enumerate_kind(c, kind_of_repr(o.repr), opts);
    json list = json::array();
    for (const auto& s : found) list.push_back(to_json(s));
    results.push_back({{"category", c->id()}, {"kind", kind_of_repr(o.repr)}, {"count", found.size()},
                       {"structures", list}});
    sink.out << c->id() << ": " << found.size() << " " << kind_of_repr(o.repr) << " structures\n";
  }
  if (results.empty()) throw InputError("no category matched");
  report["results"] = results;
  const int code = verdict(true, report);
  sink.finish(report);
  return code;
}

int cmd_oracle_certify(const Options& o, const Sink& sink, const std::string& family) {
  const Document d = load(o);
  const Transformation t = find_transformation(d, family, o.via);
  const Structure input = lift_input(d, t, o);
  const auto direction = o.direction.empty() ? claimed_extremal(t, input) : parse_extremal(o.direction);
  const Certificate cert = certify_lift(input, t, certify_options(o), direction);
  json report = base_report("oracle certify");
  report["formula"] = lift_formula(t, input);
  report["certificate"] = cert.to_json();
  sink.out << cert.to_text();
  const int code = verdict(cert.pass, report);
  sink.finish(report);
  return code;
}

int cmd_oracle_principality(const Options& o, const Sink& sink) {
  const Document d = load(o);
  json report = base_report("oracle principality");
  json items = json::array();
  bool ok = true;
  for (const auto& b : d.qubases) {
    if (!o.structure.empty() && b.id != o.structure) continue;
    const Report r = principality_check(b);
    items.push_back(r.to_json());
    sink.out << r.to_text();
    ok = ok && r.ok();
  }
  if (items.empty()) throw InputError("no base matched");
  report["reports"] = items;
  const int code = verdict(ok, report);
  sink.out << "verdict: " << report["verdict"].get<std::string>() << "\n";
  sink.finish(report);
  return code;
}

int cmd_examples(const Options& o, const Sink& sink) {
  if (o.name.empty()) {
    for (const auto& n : bundle_names()) sink.out << n << "\n";
    return kExitPass;
  }
  const Document d = bundle(o.name);
  for (const auto& c : d.categories)
    sink.out << "category " << c->id() << ": " << c->object_count() << " objects, " << c->morphism_count()
             << " morphisms\n";
  sink.out << d.functors.size() << " functors, " << d.nats.size() << " natural transformations, " << d.pointed.size()
           << " pointed, " << d.copointed.size() << " copointed, " << d.adjunctions.size() << " adjunctions, "
           << d.fibrations.size() << " fibrations\n";
  sink.out << d.closures.size() << " closures, " << d.topogenous.size() << " topogenous orders, " << d.qubases.size()
           << " bases, " << d.syntops.size() << " syntopogenous structures\n";
  sink.finish(to_json(d));
  return kExitPass;
}

// Legs named by --via: a morphism, functor, natural transformation,
// (co)pointed endofunctor or fibration.
std::vector<Leg> legs_via(const Document& d, const std::string& via, const CategoryPtr& from) {
  if (from)
    if (auto f = from->find_morphism(via)) return morphism_legs(*from, *f);
  if (const auto* f = d.functor(via)) return functor_legs(*f);
  for (const auto& n : d.nats)
    if (n.id == via) return component_legs(n);
  for (const auto& p : d.pointed)
    if (p.id == via) return component_legs(p.unit);
  for (const auto& q : d.copointed)
    if (q.id == via) return component_legs(q.counit);
  for (const auto& fd : d.fibrations)
    if (fd.id == via) return fibration_legs(fd);
  throw InputError("--via " + via + " names no morphism, functor, natural transformation or fibration");
}

int cmd_continuity(const Options& o, const Sink& sink) {
  const Document d = load(o);
  if (o.structure.empty() || o.target.empty()) throw InputError("--from and --to are required");
  const auto a = find_structure(d, o.structure, o.repr, nullptr);
  if (!a) throw InputError("no structure " + o.structure);
  std::optional<Structure> b;
  for (auto& s : all_structures(d))
    if (structure_id(s) == o.target && s.index() == a->index()) {
      b = s;
      break;
    }
  if (!b) throw InputError(std::string("no ") + kind_name(*a) + " " + o.target);
  const auto& A = structure_category(*a);
  std::vector<Leg> legs;
  if (o.via.empty()) {
    if (A != structure_category(*b)) throw InputError("structures on different categories need --via");
    for (int f = 0; f < A->morphism_count(); ++f)
      for (auto& l : morphism_legs(*A, f)) legs.push_back(std::move(l));
  } else {
    legs = legs_via(d, o.via, A);
  }
  for (const auto& l : legs) {
    if (l.from >= A->object_count() || l.to >= structure_category(*b)->object_count())
      throw InputError("--via does not connect the two structures' categories");
  }
  const std::string w = std::visit(
      [&](const auto& va) {
        using T = std::decay_t<decltype(va)>;
        return continuity_witness(va, std::get<T>(*b), legs);
      },
      *a);
  Report r(std::string("continuity from ") + kind_name(*a) + " " + o.structure + " to " + o.target);
  r.note("continuous", w.empty(), w);
  sink.out << r.to_text();
  json report = base_report("continuity");
  report["checks"] = r.to_json();
  report["legs"] = legs.size();
  const int code = verdict(r.ok(), report);
  sink.finish(report);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"synlab: finite-model lab for closure, topogenous, quasi-uniform and syntopogenous structures",
               "synlab"};
  app.require_subcommand(1);
  Options o;
  std::string family;

  auto add_in = [&](CLI::App* c) { c->add_option("--in", o.in, "instance document (JSON)"); };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "write the canonical JSON report here"); };
  auto add_oracle = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "seed for adversarial candidates (default 0xC0FFEE)");
    c->add_option("--candidates", o.candidates, "number of adversarial candidates (default 200)");
    c->add_option("--max-carrier", o.max_carrier, "largest carrier enumerated exhaustively (default 2)");
    c->add_flag("--force", o.force, "allow enumeration at carrier 3");
  };
  auto add_lift_selection = [&](CLI::App* c) {
    c->add_option("family", family, "pointed, copointed, fibration or adjoint")->required();
    c->add_option("--repr", o.repr, "syntop, qubase or closure")->required();
    c->add_option("--via", o.via, "transformation id (default: the first of the family)");
    c->add_option("--structure", o.structure, "input structure id (default: the first of the kind)");
    c->add_option("--direction", o.direction, "coarsest, finest, least or largest (default: the claim)");
  };

  auto* validate = app.add_subcommand("validate", "check category laws, transformations and structure axioms");
  add_in(validate);
  add_out(validate);

  auto* galois = app.add_subcommand("galois", "translate closures <-> topogenous orders and bases <-> syntops");
  add_in(galois);
  add_out(galois);
  galois->add_option("--repr", o.repr, "restrict to one kind");
  galois->add_option("--structure", o.structure, "restrict to one structure id");

  auto* lift = app.add_subcommand("lift", "lift a structure and certify its extremal property");
  add_in(lift);
  add_out(lift);
  add_oracle(lift);
  add_lift_selection(lift);

  auto* oracle = app.add_subcommand("oracle", "enumeration, certification and principality oracles");
  oracle->require_subcommand(1);
  auto* enumerate = oracle->add_subcommand("enumerate", "enumerate every structure of one kind");
  add_in(enumerate);
  add_out(enumerate);
  enumerate->add_option("--repr", o.repr, "closure, topogenous, qubase or syntop")->required();
  enumerate->add_option("--category", o.category, "restrict to one category");
  enumerate->add_option("--max-carrier", o.max_carrier, "enumeration cap (default 2)");
  enumerate->add_flag("--force", o.force, "allow carrier 3");
  auto* certify = oracle->add_subcommand("certify", "certify the extremal property of a lift");
  add_in(certify);
  add_out(certify);
  add_oracle(certify);
  add_lift_selection(certify);
  auto* principality = oracle->add_subcommand("principality", "check that every base has an idempotent minimum");
  add_in(principality);
  add_out(principality);
  principality->add_option("--structure", o.structure, "restrict to one base id");

  auto* examples = app.add_subcommand("examples", "list or materialize bundled instances");
  examples->add_option("name", o.name, "t0, sym, alexandrov, forgetful, sierpinski or ind3");
  add_out(examples);

  auto* continuity = app.add_subcommand("continuity", "check continuity of maps between two structures");
  add_in(continuity);
  add_out(continuity);
  continuity->add_option("--from", o.structure, "source structure id")->required();
  continuity->add_option("--to", o.target, "target structure id")->required();
  continuity->add_option("--repr", o.repr, "kind of the source structure");
  continuity->add_option("--via", o.via, "morphism, functor, natural transformation or fibration id");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInputError;
  }

  const Sink sink{out, o};
  try {
    if (validate->parsed()) return cmd_validate(o, sink);
    if (galois->parsed()) return cmd_galois(o, sink);
    if (lift->parsed()) return cmd_lift(o, sink, family);
    if (enumerate->parsed()) return cmd_oracle_enumerate(o, sink);
    if (certify->parsed()) return cmd_oracle_certify(o, sink, family);
    if (principality->parsed()) return cmd_oracle_principality(o, sink);
    if (examples->parsed()) return cmd_examples(o, sink);
    if (continuity->parsed()) return cmd_continuity(o, sink);
  } catch (const Refused& e) {
    err << "refused: " << e.what() << "\n";
    if (!o.out.empty()) sink.finish(json{{"verdict", "REFUSED"}, {"reason", e.what()}});
    return kExitCheckFailed;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace synlab
