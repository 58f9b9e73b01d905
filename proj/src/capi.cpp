#include "homometry/homometry.h"

#include <cstring>
#include <deque>
#include <exception>
#include <ios>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>

#include "counting.hpp"
#include "serialize.hpp"

struct hmt_context {
  std::string last_error;
};

struct hmt_class_iter {
  std::deque<std::string> lines;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
hmt_status guarded(hmt_context* ctx, Fn&& fn) {
  if (!ctx) return HMT_ERROR_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    fn();
    return HMT_OK;
  } catch (const std::invalid_argument& e) {
    ctx->last_error = e.what();
    return HMT_ERROR_INVALID_ARGUMENT;
  } catch (const std::ios_base::failure& e) {
    ctx->last_error = e.what();
    return HMT_ERROR_IO;
  } catch (const std::runtime_error& e) {
    ctx->last_error = e.what();
    return HMT_ERROR_IO;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return HMT_ERROR_INTERNAL;
  } catch (...) {
    ctx->last_error = "unknown error";
    return HMT_ERROR_INTERNAL;
  }
}

hmt_status require(hmt_context* ctx, bool cond, const char* message) {
  if (cond) return HMT_OK;
  if (ctx) ctx->last_error = message;
  return HMT_ERROR_INVALID_ARGUMENT;
}

void split_lines(const std::string& text, std::deque<std::string>& out) {
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    out.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
}

}  // namespace

extern "C" {

hmt_context* hmt_context_new(void) { return new (std::nothrow) hmt_context; }

void hmt_context_free(hmt_context* ctx) { delete ctx; }

const char* hmt_last_error(const hmt_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

const char* hmt_version(void) { return "1.0.0"; }

void hmt_string_free(char* s) { delete[] s; }

hmt_status hmt_count(hmt_context* ctx, uint64_t n, char** out_count) {
  if (auto st = require(ctx, out_count != nullptr, "out_count is null")) return st;
  return guarded(ctx, [&] {
    *out_count = dup_string(homometry::counting::h_coefficient(n).get_str());
  });
}

hmt_status hmt_count_refined(hmt_context* ctx, uint64_t n, char** out_pairs,
                             char** out_triples) {
  if (auto st = require(ctx, out_pairs && out_triples, "output pointer is null")) return st;
  return guarded(ctx, [&] {
    auto [pairs, triples] = homometry::counting::refined_counts(n);
    *out_pairs = dup_string(pairs.get_str());
    *out_triples = dup_string(triples.get_str());
  });
}

hmt_status hmt_count_csv(hmt_context* ctx, uint64_t n_lo, uint64_t n_hi,
                         int refined, int by_type, char** out_csv) {
  if (auto st = require(ctx, out_csv != nullptr, "out_csv is null")) return st;
  if (auto st = require(ctx, n_lo <= n_hi, "n_lo exceeds n_hi")) return st;
  return guarded(ctx, [&] {
    *out_csv = dup_string(
        homometry::serialize::count_csv(n_lo, n_hi, refined != 0, by_type != 0));
  });
}

hmt_status hmt_gf_text(hmt_context* ctx, char** out_text) {
  if (auto st = require(ctx, out_text != nullptr, "out_text is null")) return st;
  return guarded(ctx, [&] {
    *out_text = dup_string(homometry::counting::gf_show_text());
  });
}

hmt_status hmt_classify_begin(hmt_context* ctx, uint64_t n, hmt_class_iter** out_iter) {
  if (auto st = require(ctx, out_iter != nullptr, "out_iter is null")) return st;
  return guarded(ctx, [&] {
    auto iter = std::make_unique<hmt_class_iter>();
    split_lines(homometry::serialize::classify_lines(
                    homometry::classification::classes_for_n(n)),
                iter->lines);
    *out_iter = iter.release();
  });
}

hmt_status hmt_oracle_begin(hmt_context* ctx, uint64_t n, unsigned threads,
                            hmt_class_iter** out_iter) {
  if (auto st = require(ctx, out_iter != nullptr, "out_iter is null")) return st;
  return guarded(ctx, [&] {
    auto iter = std::make_unique<hmt_class_iter>();
    split_lines(homometry::serialize::oracle_lines(
                    n, homometry::bracelets::brute_force_classes(n, threads)),
                iter->lines);
    *out_iter = iter.release();
  });
}

hmt_status hmt_class_iter_next(hmt_context* ctx, hmt_class_iter* iter, char** out_line) {
  if (auto st = require(ctx, iter && out_line, "null iterator or output pointer")) return st;
  return guarded(ctx, [&] {
    if (iter->lines.empty()) {
      *out_line = nullptr;
      return;
    }
    *out_line = dup_string(iter->lines.front());
    iter->lines.pop_front();
  });
}

void hmt_class_iter_free(hmt_class_iter* iter) { delete iter; }

hmt_status hmt_minimal_tables(hmt_context* ctx, int p, int q, int full,
                              uint64_t sample_count, uint64_t seed,
                              const char* checkpoint_path, uint64_t checkpoint_every,
                              unsigned threads, int dump_cells, char** out_json) {
  if (auto st = require(ctx, out_json != nullptr, "out_json is null")) return st;
  if (auto st = require(ctx, full || !checkpoint_path || !*checkpoint_path,
                        "checkpoints require the full walk"))
    return st;
  return guarded(ctx, [&] {
    homometry::difftables::MinimalTablesOptions opts;
    opts.full = full != 0;
    opts.sample_count = sample_count;
    opts.seed = seed;
    if (checkpoint_path) opts.checkpoint_path = checkpoint_path;
    if (checkpoint_every) opts.checkpoint_every = checkpoint_every;
    opts.threads = threads;
    auto res = homometry::difftables::minimal_tables(p, q, opts);
    *out_json = dup_string(
        homometry::serialize::minimal_tables_json(res, dump_cells != 0));
  });
}

hmt_status hmt_intersections(hmt_context* ctx, char** out_json) {
  if (auto st = require(ctx, out_json != nullptr, "out_json is null")) return st;
  return guarded(ctx, [&] {
    *out_json = dup_string(homometry::serialize::intersections_json(
        homometry::difftables::pairwise_intersections()));
  });
}

hmt_status hmt_cross_check(hmt_context* ctx, uint64_t n_lo, uint64_t n_hi,
                           unsigned threads, char** out_json, int* out_ok) {
  if (auto st = require(ctx, out_json && out_ok, "output pointer is null")) return st;
  if (auto st = require(ctx, n_lo <= n_hi, "n_lo exceeds n_hi")) return st;
  return guarded(ctx, [&] {
    auto rep = homometry::verify::cross_check(n_lo, n_hi, threads);
    *out_json = dup_string(homometry::serialize::cross_check_json(rep));
    *out_ok = rep.ok() ? 1 : 0;
  });
}

hmt_status hmt_long_counts(hmt_context* ctx, uint64_t n_max, unsigned threads,
                           char** out_json, int* out_ok) {
  if (auto st = require(ctx, out_json && out_ok, "output pointer is null")) return st;
  return guarded(ctx, [&] {
    auto rep = homometry::verify::check_long_count_pairs(n_max, threads);
    *out_json = dup_string(homometry::serialize::long_count_json(rep));
    *out_ok = rep.ok() ? 1 : 0;
  });
}

hmt_status hmt_un_action(hmt_context* ctx, uint64_t n_max, char** out_json,
                         int* out_ok) {
  if (auto st = require(ctx, out_json && out_ok, "output pointer is null")) return st;
  return guarded(ctx, [&] {
    auto rep = homometry::verify::un_action_experiment(n_max);
    *out_json = dup_string(homometry::serialize::un_action_json(rep));
    *out_ok = rep.ok() ? 1 : 0;
  });
}

}  // extern "C"
