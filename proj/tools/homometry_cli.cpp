// Command-line front end; uses only the public C API.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"

#include "homometry/homometry.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitUsage = 64;

struct ContextDeleter {
  void operator()(hmt_context* c) const { hmt_context_free(c); }
};
using ContextPtr = std::unique_ptr<hmt_context, ContextDeleter>;

struct StringDeleter {
  void operator()(char* s) const { hmt_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

int write_output(const std::string& path, const char* text) {
  if (path.empty()) {
    std::fputs(text, stdout);
    return kExitOk;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot write " << path << '\n';
    return kExitError;
  }
  out << text;
  return kExitOk;
}

int report_failure(hmt_context* ctx, hmt_status st) {
  std::cerr << "error: " << hmt_last_error(ctx) << " (status " << st << ")\n";
  return kExitError;
}

// HOMOMETRY_CHECKPOINT_DIR redirects checkpoint files into one directory,
// keeping their base names.
std::string resolve_checkpoint(const std::string& path) {
  if (path.empty()) return path;
  const char* dir = std::getenv("HOMOMETRY_CHECKPOINT_DIR");
  if (!dir || !*dir) return path;
  size_t slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  return std::string(dir) + "/" + base;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nontrivial homometry classes of binary bracelets with five black beads"};
  app.require_subcommand(1);

  ContextPtr ctx(hmt_context_new());
  if (!ctx) {
    std::cerr << "error: out of memory\n";
    return kExitError;
  }
  int rc = kExitOk;

  std::string version_line = std::string("homometry ") + hmt_version();
  app.set_version_flag("--version", version_line);

  // count
  uint64_t count_n = 0, count_to = 0;
  bool refined = false, by_type = false;
  std::string count_out;
  auto* count = app.add_subcommand("count", "Class counts from the closed-form series");
  count->add_option("n", count_n, "bracelet length (or range start)")->required();
  auto* to_opt = count->add_option("--to", count_to, "range end (inclusive)");
  count->add_flag("--refined", refined, "add pair/triple class columns");
  count->add_flag("--by-type", by_type, "add per-type columns A..G");
  count->add_option("-o,--output", count_out, "write to file instead of stdout");
  count->callback([&] {
    uint64_t hi = *to_opt ? count_to : count_n;
    StringPtr csv;
    char* raw = nullptr;
    if (hmt_status st = hmt_count_csv(ctx.get(), count_n, hi, refined, by_type, &raw)) {
      rc = report_failure(ctx.get(), st);
      return;
    }
    csv.reset(raw);
    rc = write_output(count_out, csv.get());
  });

  // gf
  std::string gf_out;
  auto* gf = app.add_subcommand("gf", "Display the class-count series");
  gf->add_option("-o,--output", gf_out, "write to file instead of stdout");
  gf->callback([&] {
    char* raw = nullptr;
    if (hmt_status st = hmt_gf_text(ctx.get(), &raw)) {
      rc = report_failure(ctx.get(), st);
      return;
    }
    StringPtr text(raw);
    rc = write_output(gf_out, text.get());
  });

  // classify / oracle share the line-iterator pump.
  auto pump_lines = [&](hmt_class_iter* iter, const std::string& path) {
    std::string all;
    for (;;) {
      char* line = nullptr;
      if (hmt_status st = hmt_class_iter_next(ctx.get(), iter, &line)) {
        hmt_class_iter_free(iter);
        return report_failure(ctx.get(), st);
      }
      if (!line) break;
      StringPtr owned(line);
      all += owned.get();
      all += '\n';
    }
    hmt_class_iter_free(iter);
    return write_output(path, all.c_str());
  };

  uint64_t classify_n = 0;
  std::string classify_out;
  auto* classify = app.add_subcommand("classify", "Typed classes at one length, one JSON line each");
  classify->add_option("n", classify_n, "bracelet length")->required();
  classify->add_option("-o,--output", classify_out, "write to file instead of stdout");
  classify->callback([&] {
    hmt_class_iter* iter = nullptr;
    if (hmt_status st = hmt_classify_begin(ctx.get(), classify_n, &iter)) {
      rc = report_failure(ctx.get(), st);
      return;
    }
    rc = pump_lines(iter, classify_out);
  });

  uint64_t oracle_n = 0;
  unsigned oracle_threads = 0;
  std::string oracle_out;
  auto* oracle = app.add_subcommand("oracle", "Brute-force classes at one length, one JSON line each");
  oracle->add_option("n", oracle_n, "bracelet length")->required();
  oracle->add_option("--threads", oracle_threads, "worker threads (0 = all cores)");
  oracle->add_option("-o,--output", oracle_out, "write to file instead of stdout");
  oracle->callback([&] {
    hmt_class_iter* iter = nullptr;
    if (hmt_status st = hmt_oracle_begin(ctx.get(), oracle_n, oracle_threads, &iter)) {
      rc = report_failure(ctx.get(), st);
      return;
    }
    rc = pump_lines(iter, oracle_out);
  });

  // minimal-tables
  int mt_p = 0, mt_q = 1;
  bool mt_full = false, mt_dump = false;
  uint64_t mt_sample = 100000, mt_seed = 1, mt_every = 100000;
  unsigned mt_threads = 0;
  std::string mt_checkpoint, mt_out;
  auto* mt = app.add_subcommand("minimal-tables",
                                "Antichain of minimal difference tables for long counts (p, q)");
  mt->add_option("-p", mt_p, "first long count")->required()->check(CLI::Range(0, 2));
  mt->add_option("-q", mt_q, "second long count")->required()->check(CLI::Range(1, 2));
  auto* full_flag = mt->add_flag("--full", mt_full, "walk all 10! permutations in rank order");
  mt->add_option("--sample", mt_sample, "seeded draws when not --full (default 100000)");
  mt->add_option("--seed", mt_seed, "sampling seed (default 1)");
  mt->add_option("--checkpoint", mt_checkpoint, "checkpoint file for --full (resumes if present)")
      ->needs(full_flag);
  mt->add_option("--checkpoint-every", mt_every, "permutations between checkpoints");
  mt->add_option("--threads", mt_threads, "worker threads (0 = all cores)");
  mt->add_flag("--dump-cells", mt_dump, "include solution cells and parametrizations");
  mt->add_option("-o,--output", mt_out, "write to file instead of stdout");
  mt->callback([&] {
    std::string checkpoint = resolve_checkpoint(mt_checkpoint);
    char* raw = nullptr;
    if (hmt_status st = hmt_minimal_tables(ctx.get(), mt_p, mt_q, mt_full, mt_sample,
                                           mt_seed, checkpoint.c_str(), mt_every,
                                           mt_threads, mt_dump, &raw)) {
      rc = report_failure(ctx.get(), st);
      return;
    }
    StringPtr json(raw);
    rc = write_output(mt_out, json.get());
  });

  // intersections
  std::string ix_out;
  auto* ix = app.add_subcommand("intersections",
                                "Intersections of the reference minimal solution sets");
  ix->add_option("-o,--output", ix_out, "write to file instead of stdout");
  ix->callback([&] {
    char* raw = nullptr;
    if (hmt_status st = hmt_intersections(ctx.get(), &raw)) {
      rc = report_failure(ctx.get(), st);
      return;
    }
    StringPtr json(raw);
    rc = write_output(ix_out, json.get());
  });

  // verify (cross | long-counts | un-action)
  auto* verify = app.add_subcommand("verify", "Verification sweeps");
  verify->require_subcommand(1);

  auto finish_verify = [&](hmt_status st, char* raw, int ok, const std::string& path) {
    if (st) {
      rc = report_failure(ctx.get(), st);
      return;
    }
    StringPtr json(raw);
    rc = write_output(path, json.get());
    if (rc == kExitOk && !ok) rc = kExitCounterexample;
  };

  uint64_t cross_lo = 5, cross_hi = 60;
  unsigned cross_threads = 0;
  std::string cross_out;
  auto* cross = verify->add_subcommand(
      "cross", "Brute force vs typed classes vs series coefficients");
  cross->add_option("--lo", cross_lo, "range start (default 5)");
  cross->add_option("--hi", cross_hi, "range end (default 60)");
  cross->add_option("--threads", cross_threads, "worker threads (0 = all cores)");
  cross->add_option("-o,--output", cross_out, "write to file instead of stdout");
  cross->callback([&] {
    char* raw = nullptr;
    int ok = 0;
    hmt_status st = hmt_cross_check(ctx.get(), cross_lo, cross_hi, cross_threads, &raw, &ok);
    finish_verify(st, raw, ok, cross_out);
  });

  uint64_t lc_max = 40;
  unsigned lc_threads = 0;
  std::string lc_out;
  auto* lc = verify->add_subcommand("long-counts",
                                    "Long-count pairs of all class members");
  lc->add_option("--n-max", lc_max, "largest length (default 40)");
  lc->add_option("--threads", lc_threads, "worker threads (0 = all cores)");
  lc->add_option("-o,--output", lc_out, "write to file instead of stdout");
  lc->callback([&] {
    char* raw = nullptr;
    int ok = 0;
    hmt_status st = hmt_long_counts(ctx.get(), lc_max, lc_threads, &raw, &ok);
    finish_verify(st, raw, ok, lc_out);
  });

  uint64_t un_max = 40;
  std::string un_out;
  auto* un = verify->add_subcommand("un-action",
                                    "Unit-multiplication action on typed classes");
  un->add_option("--n-max", un_max, "largest length (default 40)");
  un->add_option("-o,--output", un_out, "write to file instead of stdout");
  un->callback([&] {
    char* raw = nullptr;
    int ok = 0;
    hmt_status st = hmt_un_action(ctx.get(), un_max, &raw, &ok);
    finish_verify(st, raw, ok, un_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return rc;
}
