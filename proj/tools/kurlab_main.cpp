// kurlab command line: exact counts, word normalization, free monoids,
// finite-space monoid generation and witness certification, all through the
// shared-library C API.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kurlab.h"

namespace {

// exit codes: 0 ok/verified, 1 verification failed, 2 input error, 3 cap hit
int exit_code(kur_status st) {
  switch (st) {
    case KUR_OK: return 0;
    case KUR_CHECK_FAILED: return 1;
    case KUR_ERR_INPUT: return 2;
    case KUR_ERR_LIMIT: return 3;
    default: return 1;
  }
}

int finish(kur_status st) {
  if (st != KUR_OK && st != KUR_CHECK_FAILED)
    std::cerr << "kurlab: " << kur_last_error() << "\n";
  return exit_code(st);
}

// prints and frees an API string result
int emit(kur_status st, char* text) {
  if (st == KUR_OK || st == KUR_CHECK_FAILED) {
    if (text) {
      std::fputs(text, stdout);
      if (text[0] && text[std::strlen(text) - 1] != '\n') std::fputc('\n', stdout);
      kur_string_free(text);
    }
  }
  return finish(st);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--space", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operator-word calculator for chains of topologies"};
  app.require_subcommand(1);

  unsigned ground_cap = 6;
  if (const char* env = std::getenv("KURLAB_MAX_GROUND")) ground_cap = std::atoi(env);
  app.add_option("--max-ground", ground_cap, "ground-set size cap");
  std::size_t monoid_cap = 0;  // 0 = library default
  app.add_option("--max-monoid", monoid_cap, "generated/free monoid size cap");
  unsigned enum_cap = 0;
  app.add_option("--max-enum", enum_cap, "per-side chain size cap for enumeration");
  std::string format = "";
  app.add_option("--format", format, "output format (text|json|csv|dot)");

  unsigned n = 1, p = 1, ground = 3, max_asympt = 100, stirling_n = 0;
  bool grid = false, full = false, check_idem = false, with_complement = false;
  bool certify = false, with_stirling = false;
  unsigned long long budget = 10000, seed = 1;
  std::string word, word2, space_path, hasse_path;

  auto* c_count = app.add_subcommand("count", "exact operator-word counts K(n,p)");
  c_count->add_option("--n", n, "negative side")->required(false);
  c_count->add_option("--p", p, "positive side")->required(false);
  c_count->add_flag("--grid", grid, "emit the CSV grid plus the K/2K diagonal rows");

  auto* c_enum = app.add_subcommand("enumerate", "list all structured words over a chain");
  c_enum->add_option("--n", n)->required();
  c_enum->add_option("--p", p)->required();
  c_enum->add_flag("--full", full, "include complemented words");

  auto* c_norm = app.add_subcommand("normalize", "rewrite a word to its normal form");
  c_norm->add_option("--n", n)->required();
  c_norm->add_option("--p", p)->required();
  c_norm->add_option("word", word, "token word, e.g. \"k0 i0 k0\"")->required();

  auto* c_equal = app.add_subcommand("equal", "decide equality of two words");
  c_equal->add_option("--n", n)->required();
  c_equal->add_option("--p", p)->required();
  c_equal->add_option("word1", word, "first word")->required();
  c_equal->add_option("word2", word2, "second word")->required();

  auto* c_free = app.add_subcommand("free", "build the free monoid over a chain");
  c_free->add_option("--n", n)->required();
  c_free->add_option("--p", p)->required();
  c_free->add_option("--hasse", hasse_path, "write the covering relation as DOT");
  c_free->add_flag("--check-idempotent", check_idem, "verify every element is idempotent");

  auto* c_monoid = app.add_subcommand("monoid", "generate the operator monoid of a space");
  c_monoid->add_option("--space", space_path, "space JSON file")->required();
  c_monoid->add_flag("--complement", with_complement, "include the complement generator");
  c_monoid->add_option("--max-size", monoid_cap, "generation cap");

  auto* c_bound = app.add_subcommand("verify-bound", "check the monoid size bound for a space");
  c_bound->add_option("--space", space_path)->required();
  c_bound->add_flag("--complement", with_complement);

  auto* c_sat = app.add_subcommand("saturated", "saturation test and collapsed bound");
  c_sat->add_option("--space", space_path)->required();

  auto* c_wit = app.add_subcommand("witness", "pairwise-separating witness certification");
  c_wit->add_option("--n", n)->required();
  c_wit->add_flag("--certify", certify, "run the full pairwise certification");

  auto* c_asy = app.add_subcommand("asympt", "exact growth-ratio checks");
  c_asy->add_option("--max", max_asympt, "check 9K <= 16 binom^2 up to this n");
  c_asy->add_flag("--stirling", with_stirling, "include the Stirling-form ratio");
  c_asy->add_option("--stirling-n", stirling_n, "n for the Stirling ratio");

  auto* c_search = app.add_subcommand("search", "largest closure-orbit over incomparable pairs");
  c_search->add_option("--ground", ground, "ground set size")->required();
  c_search->add_option("--budget", budget, "random samples for ground > 3");
  c_search->add_option("--seed", seed, "sampling seed");

  auto* c_quad = app.add_subcommand("quadruples", "collapse-morphism separation check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  bool json = format == "json";

  if (*c_count) {
    char* out = nullptr;
    if (grid) {
      unsigned gn = c_count->count("--n") ? n : 9;
      unsigned gp = c_count->count("--p") ? p : 9;
      char* diag = nullptr;
      kur_status st = kur_count_grid(gn, gp, &out);
      if (st != KUR_OK) return finish(st);
      st = kur_count_diagonal(gn, &diag);
      if (st != KUR_OK) {
        kur_string_free(out);
        return finish(st);
      }
      std::fputs(out, stdout);
      std::fputc('\n', stdout);
      std::fputs(diag, stdout);
      kur_string_free(out);
      kur_string_free(diag);
      return 0;
    }
    kur_status st = kur_count(n, p, &out);
    return emit(st, out);
  }
  if (*c_enum) {
    char* out = nullptr;
    kur_status st = kur_enumerate(n, p, full, enum_cap, json, &out);
    return emit(st, out);
  }
  if (*c_norm) {
    char* out = nullptr;
    kur_status st = kur_normalize(n, p, word.c_str(), &out);
    return emit(st, out);
  }
  if (*c_equal) {
    int eq = 0;
    kur_status st = kur_words_equal(n, p, word.c_str(), word2.c_str(), &eq);
    if (st == KUR_OK) std::puts(eq ? "true" : "false");
    return finish(st);
  }
  if (*c_free) {
    kur_monoid* m = nullptr;
    kur_status st = kur_monoid_build(n, p, monoid_cap, &m);
    if (st != KUR_OK) return finish(st);
    int rc = 0;
    if (!hasse_path.empty()) {
      char* dot = nullptr;
      st = kur_monoid_hasse_dot(m, &dot);
      if (st != KUR_OK) {
        kur_monoid_free(m);
        return finish(st);
      }
      std::ofstream f(hasse_path);
      f << dot;
      kur_string_free(dot);
      if (!f) {
        std::cerr << "kurlab: cannot write " << hasse_path << "\n";
        kur_monoid_free(m);
        return 2;
      }
    }
    if (json) {
      char* out = nullptr;
      st = kur_monoid_json(m, &out);
      if (st == KUR_OK) {
        std::puts(out);
        kur_string_free(out);
      } else {
        rc = exit_code(st);
        std::cerr << "kurlab: " << kur_last_error() << "\n";
      }
    } else {
      std::printf("elements: %zu\n", kur_monoid_size(m));
    }
    if (check_idem && rc == 0) {
      int ok = 0;
      st = kur_monoid_idempotent(m, &ok);
      if (!json) std::printf("idempotent: %s\n", ok ? "true" : "false");
      if (st != KUR_OK) rc = exit_code(st);
    }
    kur_monoid_free(m);
    return rc;
  }
  if (*c_monoid || *c_bound || *c_sat) {
    kur_space* s = nullptr;
    std::string text;
    try {
      text = read_file(space_path);
    } catch (const CLI::Error& e) {
      std::cerr << "kurlab: " << e.what() << "\n";
      return 2;
    }
    kur_status st = kur_space_parse(text.c_str(), ground_cap, &s);
    if (st != KUR_OK) return finish(st);
    char* out = nullptr;
    if (*c_monoid) st = kur_space_monoid_report(s, with_complement, monoid_cap, &out);
    if (*c_bound) st = kur_space_verify_bound(s, with_complement, monoid_cap, &out);
    if (*c_sat) {
      int saturated = 0;
      st = kur_space_saturated(s, &saturated);
      if (st == KUR_OK && !saturated) {
        std::puts("{\"saturated\":false}");
        kur_space_free(s);
        return 0;
      }
      if (st == KUR_OK) st = kur_space_saturated_bound(s, monoid_cap, &out);
      if ((st == KUR_OK || st == KUR_CHECK_FAILED) && out) {
        std::string merged(out);
        kur_string_free(out);
        out = nullptr;
        merged.insert(1, "\"saturated\":true,");
        std::puts(merged.c_str());
        kur_space_free(s);
        return finish(st);
      }
    }
    kur_space_free(s);
    return emit(st, out);
  }
  if (*c_wit) {
    if (!certify) {
      std::cerr << "kurlab: witness requires --certify\n";
      return 2;
    }
    char* out = nullptr;
    kur_status st = kur_witness_certify(n, &out);
    return emit(st, out);
  }
  if (*c_asy) {
    char* out = nullptr;
    kur_status st = kur_asympt_report(max_asympt, with_stirling, stirling_n, &out);
    return emit(st, out);
  }
  if (*c_search) {
    char* out = nullptr;
    kur_status st = kur_search_incomparable(ground, budget, seed, ground_cap, &out);
    return emit(st, out);
  }
  if (*c_quad) {
    char* out = nullptr;
    kur_status st = kur_quadruple_check(&out);
    return emit(st, out);
  }
  return 2;
}
