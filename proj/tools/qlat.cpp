// qlat: command-line front end for the clopen-tuple lattice library.
//
// Subcommands read JSON from stdin (or -i FILE) and write JSON to stdout
// (or -o FILE), so they compose in pipes. Exit codes: 0 success, 1 law or
// validation failure (counterexample as JSON on stderr), 2 input error.
// Every run is deterministic given its inputs and --seed.

#include "qlat/embeddings.hpp"
#include "qlat/hasse.hpp"
#include "qlat/irreducibles.hpp"
#include "qlat/json_io.hpp"
#include "qlat/laws.hpp"
#include "qlat/paths.hpp"
#include "qlat/words.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace {

using namespace qlat;

constexpr int kExitLawFailure = 1;
constexpr int kExitInputError = 2;

struct Io {
  std::string in_file;   // empty: stdin
  std::string out_file;  // empty: stdout
};

std::string read_all(const Io& io) {
  if (io.in_file.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(io.in_file);
  if (!f) throw std::invalid_argument("cannot open input file " + io.in_file);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json read_json(const Io& io) {
  try {
    return Json::parse(read_all(io));
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON input: ") + e.what());
  }
}

void write_text(const Io& io, const std::string& text) {
  if (io.out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(io.out_file);
  if (!f) throw std::invalid_argument("cannot open output file " + io.out_file);
  f << text;
}

void write_json(const Io& io, const Json& j) { write_text(io, j.dump() + "\n"); }

void emit_error(const Json& j) { std::cerr << j.dump() << "\n"; }

// ---------------------------------------------------------------------------
// Algebra selection. --algebra {bool|sugihara|chain:N|step}, --table FILE for
// a user-supplied finite operation table; commands that read a tuple can
// infer the algebra from its "algebra" tag instead.

using AnyAlgebra = std::variant<FiniteAlgebra, ChainAlgebra, StepAlgebra>;

AnyAlgebra parse_algebra(const std::string& name, const std::string& table_file) {
  if (!table_file.empty()) {
    std::ifstream f(table_file);
    if (!f) throw std::invalid_argument("cannot open table file " + table_file);
    Json j;
    try {
      j = Json::parse(f);
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument(std::string("malformed JSON table: ") + e.what());
    }
    return finite_algebra_from_json(j);
  }
  if (name == "bool") return bool2();
  if (name == "sugihara") return sugihara3();
  if (name == "step") return StepAlgebra{};
  if (name.rfind("chain:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(name.substr(6));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad chain size in --algebra " + name);
    }
    return ChainAlgebra(n);
  }
  throw std::invalid_argument("unknown algebra '" + name +
                              "' (expected bool, sugihara, chain:N or step)");
}

AnyAlgebra resolve_algebra(const std::string& name, const std::string& table_file,
                           const Json* input) {
  if (!table_file.empty() || !name.empty()) return parse_algebra(name, table_file);
  if (input && input->is_object() && input->contains("algebra"))
    return parse_algebra(input->at("algebra").get<std::string>(), "");
  throw std::invalid_argument("no --algebra given and none recorded in the input");
}

// ---------------------------------------------------------------------------
// Subcommand bodies. Each returns the process exit code.

struct AxiomOpts {
  std::string algebra = "bool";
  std::string table;
  long long budget = 200000;
  std::uint32_t seed = kDefaultSeed;
  Io io;
};

int run_axioms(const AxiomOpts& o) {
  return std::visit(
      [&](const auto& alg) {
        auto reports = check_lbs_axioms(alg, o.budget, o.seed);
        auto more = check_involutive_rl_axioms(alg, o.budget, o.seed);
        reports.insert(reports.end(), more.begin(), more.end());
        write_json(o.io, law_reports_to_json(reports));
        if (all_pass(reports)) return 0;
        std::vector<LawReport> failed;
        for (const auto& r : reports)
          if (!r.pass) failed.push_back(r);
        emit_error(law_reports_to_json(failed));
        return kExitLawFailure;
      },
      parse_algebra(o.algebra, o.table));
}

struct EnumerateOpts {
  std::string algebra = "bool";
  std::string table;
  int d = 3;
  bool count_only = false;
  std::string dot_file;
  bool force = false;
  Io io;
};

int run_enumerate(const EnumerateOpts& o) {
  return std::visit(
      [&](const auto& alg) {
        const long long max_search = o.force ? 1'000'000'000 : 10'000'000;
        const long long max_out = o.force ? 1'000'000'000 : 100'000;
        auto elems = enumerate_clopen(alg, o.d, max_search, max_out);
        bool wrote = false;
        if (o.count_only) {
          write_text(o.io, std::to_string(elems.size()) + "\n");
          wrote = true;
        }
        if (!o.dot_file.empty()) {
          const std::string dot = hasse_dot(alg, elems);
          if (o.dot_file == "-")
            std::cout << dot;
          else
            write_text(Io{"", o.dot_file}, dot);
          wrote = true;
        }
        if (!wrote) {
          Json arr = Json::array();
          for (const auto& e : elems) arr.push_back(tuple_to_json(alg, e));
          write_json(o.io, arr);
        }
        return 0;
      },
      parse_algebra(o.algebra, o.table));
}

struct TupleOpts {
  std::string algebra;
  std::string table;
  Io io;
};

int run_clopen_check(const TupleOpts& o) {
  const Json in = read_json(o.io);
  return std::visit(
      [&](const auto& alg) {
        auto f = tuple_from_json(alg, in);
        if (auto v = closed_violation(alg, f)) {
          emit_error(Json{{"error", "tuple not closed"}, {"triple", *v}});
          return kExitLawFailure;
        }
        if (auto v = open_violation(alg, f)) {
          emit_error(Json{{"error", "tuple not open"}, {"triple", *v}});
          return kExitLawFailure;
        }
        write_json(o.io, Json{{"clopen", true}});
        return 0;
      },
      resolve_algebra(o.algebra, o.table, &in));
}

int run_closure_interior(const TupleOpts& o, bool close) {
  const Json in = read_json(o.io);
  return std::visit(
      [&](const auto& alg) {
        auto f = tuple_from_json(alg, in);
        write_json(o.io, tuple_to_json(alg, close ? closure(alg, f) : interior(alg, f)));
        return 0;
      },
      resolve_algebra(o.algebra, o.table, &in));
}

// join/meet accept a JSON array of two or more operands, star a single one.
// Operands are tuples (objects with "components") or bare elements.
int run_join_meet(const TupleOpts& o, bool join) {
  const Json in = read_json(o.io);
  if (!in.is_array() || in.size() < 2)
    throw std::invalid_argument("expected a JSON array of at least two operands");
  const Json& first = in.at(0);
  return std::visit(
      [&](const auto& alg) {
        if (first.is_object() && first.contains("components")) {
          using A = std::decay_t<decltype(alg)>;
          std::vector<ClopenTupleT<A>> ops;
          for (const auto& j : in) ops.push_back(to_clopen(alg, tuple_from_json(alg, j)));
          const int d = ops.front().t.d;
          auto r = join ? ld_join_many(alg, d, ops) : ld_meet_many(alg, d, ops);
          write_json(o.io, tuple_to_json(alg, r));
        } else {
          auto acc = elem_from_json(alg, first);
          for (size_t i = 1; i < in.size(); ++i) {
            auto b = elem_from_json(alg, in.at(i));
            acc = join ? alg.join(acc, b) : alg.meet(acc, b);
          }
          write_json(o.io, elem_to_json(alg, acc));
        }
        return 0;
      },
      resolve_algebra(o.algebra, o.table, &first));
}

int run_star(const TupleOpts& o) {
  const Json in = read_json(o.io);
  return std::visit(
      [&](const auto& alg) {
        if (in.is_object() && in.contains("components")) {
          write_json(o.io, tuple_to_json(alg, tuple_star(alg, tuple_from_json(alg, in))));
        } else {
          write_json(o.io, elem_to_json(alg, alg.star(elem_from_json(alg, in))));
        }
        return 0;
      },
      resolve_algebra(o.algebra, o.table, &in));
}

struct WordOpts {
  int n = 1;
  std::string word;
  Io io;
};

int run_word2tuple(const WordOpts& o) {
  MultiWord w{1, 1, {1}};
  if (!o.word.empty()) {
    w = word_from_string(o.n, o.word);
  } else {
    const Json in = read_json(o.io);
    if (!in.is_object() || !in.contains("d") || !in.contains("n") || !in.contains("word"))
      throw std::invalid_argument("word JSON needs d, n and word");
    w = make_word(in.at("d").get<int>(), in.at("n").get<int>(),
                  in.at("word").get<std::vector<int>>());
  }
  const ChainAlgebra alg(w.n);
  write_json(o.io, tuple_to_json(alg, word_to_tuple(alg, w)));
  return 0;
}

int run_tuple2path(const TupleOpts& o) {
  const Json in = read_json(o.io);
  const StepAlgebra alg;
  auto f = to_clopen(alg, tuple_from_json(alg, in));
  write_json(o.io, staircase_to_json(tuple_to_staircase(f)));
  return 0;
}

int run_path2tuple(const TupleOpts& o) {
  const Json in = read_json(o.io);
  const StepAlgebra alg;
  write_json(o.io, tuple_to_json(alg, staircase_to_tuple(alg, staircase_from_json(in))));
  return 0;
}

struct PathPointOpts {
  int i0 = 1;
  std::string x0 = "0";
  Io io;
};

int run_path_point(const PathPointOpts& o) {
  const Json in = read_json(o.io);
  const StepAlgebra alg;
  auto f = to_clopen(alg, tuple_from_json(alg, in));
  const Rat x0 = rat_parse(o.x0);
  write_json(o.io, point_to_json(path_point(f, o.i0, x0)));
  return 0;
}

int run_decompose(const TupleOpts& o, bool jirr) {
  const Json in = read_json(o.io);
  const StepAlgebra alg;
  auto f = to_clopen(alg, tuple_from_json(alg, in));
  const auto points = jirr ? jirr_decomposition(alg, f) : mirr_decomposition(alg, f);
  Json arr = Json::array();
  for (const auto& p : points) arr.push_back(point_to_json(p));
  write_json(o.io, arr);
  return 0;
}

struct EmbedOpts {
  int n = 0;
  int m = 0;  // 0: lift into the unit interval; else refine by m
  int d = 0;  // optional dimension check
  Io io;
};

int run_embed(const EmbedOpts& o) {
  const Json in = read_json(o.io);
  const int n = o.n;
  if (n < 1) throw std::invalid_argument("embed needs --n >= 1");
  const ChainAlgebra src(n);
  const bool is_tuple = in.is_object() && in.contains("components");
  if (is_tuple && o.d > 0 && in.at("d").get<int>() != o.d)
    throw std::invalid_argument("tuple dimension does not match --d");

  if (o.m > 0) {
    const ChainEmbedding e = refine_embedding(n, o.m);
    const ChainAlgebra dst(n * o.m);
    if (is_tuple) {
      auto f = to_clopen(src, tuple_from_json(src, in));
      write_json(o.io, tuple_to_json(dst, lift_tuple(dst, e, f)));
    } else {
      write_json(o.io, elem_to_json(dst, lift_to_chain(e, elem_from_json(src, in))));
    }
  } else {
    const ChainEmbedding e = unit_embedding(n);
    const StepAlgebra dst;
    if (is_tuple) {
      auto f = to_clopen(src, tuple_from_json(src, in));
      write_json(o.io, tuple_to_json(dst, lift_tuple(dst, e, f)));
    } else {
      write_json(o.io, elem_to_json(dst, lift_to_step(e, elem_from_json(src, in))));
    }
  }
  return 0;
}

struct CoconeOpts {
  int n = 2;
  int m = 2;
  long long budget = 1000;
  std::uint32_t seed = kDefaultSeed;
  Io io;
};

Json embedding_to_json(const ChainEmbedding& e) {
  if (e.kind == ChainEmbedding::Kind::into_unit) return Json{{"kind", "j_n"}, {"n", e.n}};
  return Json{{"kind", "j_nm"}, {"n", e.n}, {"m", e.m}};
}

int run_cocone_check(const CoconeOpts& o) {
  const LawReport rep = check_cocone(o.n, o.m, o.budget, o.seed);
  Json out{{"embeddings",
            Json::array({embedding_to_json(refine_embedding(o.n, o.m)),
                         embedding_to_json(unit_embedding(o.n * o.m)),
                         embedding_to_json(unit_embedding(o.n))})},
           {"report", law_report_to_json(rep)}};
  write_json(o.io, out);
  if (!rep.pass) {
    emit_error(law_report_to_json(rep));
    return kExitLawFailure;
  }
  return 0;
}

void add_io(CLI::App* cmd, Io& io) {
  cmd->add_option("-i,--input", io.in_file, "input file (default: stdin)");
  cmd->add_option("-o,--output", io.out_file, "output file (default: stdout)");
}

void add_algebra(CLI::App* cmd, std::string& alg, std::string& table, bool with_default) {
  auto* opt = cmd->add_option("--algebra", alg, "algebra: bool, sugihara, chain:N or step");
  if (with_default) opt->capture_default_str();
  cmd->add_option("--table", table, "JSON file with finite operation tables");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattices of clopen tuples over involutive residuated structures"};
  app.require_subcommand(1);

  AxiomOpts ax;
  auto* c_ax = app.add_subcommand("axioms", "check the algebra's equational laws");
  add_algebra(c_ax, ax.algebra, ax.table, true);
  c_ax->add_option("--budget", ax.budget, "max cases per law")->capture_default_str();
  c_ax->add_option("--seed", ax.seed, "sampling seed")->capture_default_str();
  add_io(c_ax, ax.io);

  EnumerateOpts en;
  auto* c_en = app.add_subcommand("enumerate", "list all clopen tuples of a finite algebra");
  add_algebra(c_en, en.algebra, en.table, true);
  c_en->add_option("--d", en.d, "tuple dimension")->capture_default_str();
  c_en->add_flag("--count", en.count_only, "print only the number of tuples");
  c_en->add_option("--dot", en.dot_file, "write the Hasse diagram as DOT ('-' for stdout)");
  c_en->add_flag("--force", en.force, "lift the enumeration size guards");
  add_io(c_en, en.io);

  TupleOpts tu[7];
  auto* c_cc = app.add_subcommand("clopen-check", "verify a tuple is closed and open");
  add_algebra(c_cc, tu[0].algebra, tu[0].table, false);
  add_io(c_cc, tu[0].io);
  auto* c_cl = app.add_subcommand("closure", "least closed tuple above the input");
  add_algebra(c_cl, tu[1].algebra, tu[1].table, false);
  add_io(c_cl, tu[1].io);
  auto* c_in = app.add_subcommand("interior", "greatest open tuple below the input");
  add_algebra(c_in, tu[2].algebra, tu[2].table, false);
  add_io(c_in, tu[2].io);
  auto* c_jn = app.add_subcommand("join", "join of tuples (or bare elements)");
  add_algebra(c_jn, tu[3].algebra, tu[3].table, false);
  add_io(c_jn, tu[3].io);
  auto* c_mt = app.add_subcommand("meet", "meet of tuples (or bare elements)");
  add_algebra(c_mt, tu[4].algebra, tu[4].table, false);
  add_io(c_mt, tu[4].io);
  auto* c_st = app.add_subcommand("star", "involution of a tuple (or bare element)");
  add_algebra(c_st, tu[5].algebra, tu[5].table, false);
  add_io(c_st, tu[5].io);

  WordOpts wo;
  auto* c_wt = app.add_subcommand("word2tuple", "encode a multiset word as a clopen tuple");
  c_wt->add_option("--n", wo.n, "occurrences of each letter")->capture_default_str();
  c_wt->add_option("word", wo.word, "ASCII word, distinct letters ranked alphabetically");
  add_io(c_wt, wo.io);

  TupleOpts t2p, p2t, dj, dm;
  auto* c_tp = app.add_subcommand("tuple2path", "staircase of a clopen step tuple");
  add_io(c_tp, t2p.io);
  auto* c_pt = app.add_subcommand("path2tuple", "clopen step tuple of a staircase");
  add_io(c_pt, p2t.io);

  PathPointOpts pp;
  auto* c_pp = app.add_subcommand("path-point", "point of the path at a given coordinate");
  c_pp->add_option("--i0", pp.i0, "coordinate index (1-based)")->required();
  c_pp->add_option("--x0", pp.x0, "coordinate value, rational p/q")->required();
  add_io(c_pp, pp.io);

  auto* c_dj = app.add_subcommand("decompose-jirr", "join-irreducible decomposition points");
  add_io(c_dj, dj.io);
  auto* c_dm = app.add_subcommand("decompose-mirr", "meet-irreducible decomposition points");
  add_io(c_dm, dm.io);

  EmbedOpts em;
  auto* c_em = app.add_subcommand("embed", "lift along a chain embedding");
  c_em->add_option("--n", em.n, "source chain size")->required();
  c_em->add_option("--m", em.m, "refinement factor (omit to lift into [0,1])");
  c_em->add_option("--d", em.d, "expected tuple dimension");
  add_io(c_em, em.io);

  CoconeOpts co;
  auto* c_co = app.add_subcommand("cocone-check", "verify the embedding cocone identity");
  c_co->add_option("--n", co.n, "source chain size")->capture_default_str();
  c_co->add_option("--m", co.m, "refinement factor")->capture_default_str();
  c_co->add_option("--budget", co.budget, "samples when not exhaustive")->capture_default_str();
  c_co->add_option("--seed", co.seed, "sampling seed")->capture_default_str();
  add_io(c_co, co.io);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (c_ax->parsed()) return run_axioms(ax);
    if (c_en->parsed()) return run_enumerate(en);
    if (c_cc->parsed()) return run_clopen_check(tu[0]);
    if (c_cl->parsed()) return run_closure_interior(tu[1], true);
    if (c_in->parsed()) return run_closure_interior(tu[2], false);
    if (c_jn->parsed()) return run_join_meet(tu[3], true);
    if (c_mt->parsed()) return run_join_meet(tu[4], false);
    if (c_st->parsed()) return run_star(tu[5]);
    if (c_wt->parsed()) return run_word2tuple(wo);
    if (c_tp->parsed()) return run_tuple2path(t2p);
    if (c_pt->parsed()) return run_path2tuple(p2t);
    if (c_pp->parsed()) return run_path_point(pp);
    if (c_dj->parsed()) return run_decompose(dj, true);
    if (c_dm->parsed()) return run_decompose(dm, false);
    if (c_em->parsed()) return run_embed(em);
    if (c_co->parsed()) return run_cocone_check(co);
    emit_error(Json{{"error", "no subcommand"}});
    return kExitInputError;
  } catch (const Json::exception& e) {
    emit_error(Json{{"error", std::string("JSON error: ") + e.what()}});
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    emit_error(Json{{"error", e.what()}});
    return kExitInputError;
  } catch (const std::logic_error& e) {
    emit_error(Json{{"error", e.what()}});
    return kExitLawFailure;
  }
}
