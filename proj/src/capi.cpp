#include "geulerian.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <new>
#include <string>

#include "bars.hpp"
#include "bijection.hpp"
#include "context.hpp"
#include "errors.hpp"
#include "eulerian.hpp"
#include "oracle.hpp"
#include "render.hpp"
#include "verify.hpp"

struct geu_ctx {
  geu::Context core;
  std::string error;
};

namespace {

int code_of(geu::errc code) {
  switch (code) {
    case geu::errc::ok: return GEU_OK;
    case geu::errc::invalid_argument: return GEU_ERR_INVALID_ARGUMENT;
    case geu::errc::empty_word: return GEU_ERR_EMPTY_WORD;
    case geu::errc::duplicate_value: return GEU_ERR_DUPLICATE_VALUE;
    case geu::errc::value_out_of_range: return GEU_ERR_VALUE_OUT_OF_RANGE;
    case geu::errc::cap_exceeded: return GEU_ERR_CAP_EXCEEDED;
    case geu::errc::invalid_position: return GEU_ERR_INVALID_POSITION;
    case geu::errc::no_matching_row: return GEU_ERR_NO_MATCHING_ROW;
    case geu::errc::unclassifiable: return GEU_ERR_UNCLASSIFIABLE;
    case geu::errc::internal: return GEU_ERR_INTERNAL;
  }
  return GEU_ERR_INTERNAL;
}

// Runs fn, routing exceptions into the handle's error slot.
template <typename Fn>
int guarded(geu_ctx* ctx, Fn&& fn) {
  if (ctx == nullptr) return GEU_ERR_INVALID_ARGUMENT;
  ctx->error.clear();
  try {
    fn();
    return GEU_OK;
  } catch (const geu::Error& e) {
    ctx->error = e.what();
    return code_of(e.code());
  } catch (const std::bad_alloc&) {
    ctx->error = "out of memory";
    return GEU_ERR_NOMEM;
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return GEU_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) geu::fail(geu::errc::invalid_argument, what);
}

geu::Permutation make_perm(const int* word, int n) {
  require(word != nullptr, "word is null");
  require(n >= 1, "n must be >= 1");
  return geu::Permutation(std::vector<int>(word, word + n));
}

void write_word(const geu::Permutation& p, int* out_word) {
  require(out_word != nullptr, "output buffer is null");
  const auto& w = p.word();
  std::copy(w.begin(), w.end(), out_word);
}

geu::Format format_of(int format) {
  switch (format) {
    case GEU_FORMAT_PLAIN: return geu::Format::plain;
    case GEU_FORMAT_CSV: return geu::Format::csv;
    case GEU_FORMAT_JSON: return geu::Format::json;
    default: geu::fail(geu::errc::invalid_argument, "unknown format code");
  }
}

geu::Side side_of(int side) {
  switch (side) {
    case GEU_SIDE_A: return geu::Side::A;
    case GEU_SIDE_B: return geu::Side::B;
    default: geu::fail(geu::errc::invalid_argument, "unknown side code");
  }
}

void emit(char** out, const std::string& value) {
  require(out != nullptr, "output pointer is null");
  *out = dup_string(value);
}

}  // namespace

extern "C" {

const char* geu_version(void) { return "1.0.0"; }

geu_ctx* geu_ctx_new(void) { return new (std::nothrow) geu_ctx(); }

void geu_ctx_free(geu_ctx* ctx) { delete ctx; }

int geu_ctx_set_enum_cap(geu_ctx* ctx, int cap) {
  return guarded(ctx, [&] {
    require(cap >= 1, "cap must be >= 1");
    ctx->core.enum_cap = cap;
  });
}

int geu_ctx_enum_cap(const geu_ctx* ctx) { return ctx == nullptr ? -1 : ctx->core.enum_cap; }

const char* geu_ctx_error_message(const geu_ctx* ctx) {
  return ctx == nullptr ? "null context" : ctx->error.c_str();
}

void geu_string_free(char* s) { std::free(s); }

int geu_permutation_stats(geu_ctx* ctx, const int* word, int n, geu_perm_stats* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "output pointer is null");
    const geu::Permutation p = make_perm(word, n);
    out->n = p.size();
    out->ascents = geu::ascent_count(p);
    out->weak_excedances = geu::weak_excedance_count(p);
    out->maj = geu::major_index(p);
    out->q_position = geu::q_position(p);
  });
}

int geu_cycle_form(geu_ctx* ctx, const int* word, int n, char** out) {
  return guarded(ctx, [&] {
    emit(out, geu::to_string(geu::standard_cycle_form(make_perm(word, n))));
  });
}

int geu_fundamental_map(geu_ctx* ctx, const int* word, int n, int* out_word) {
  return guarded(ctx, [&] { write_word(geu::fundamental_map(make_perm(word, n)), out_word); });
}

int geu_fundamental_inverse(geu_ctx* ctx, const int* word, int n, int* out_word) {
  return guarded(ctx,
                 [&] { write_word(geu::fundamental_inverse(make_perm(word, n)), out_word); });
}

int geu_complement(geu_ctx* ctx, const int* word, int n, int* out_word) {
  return guarded(ctx, [&] { write_word(geu::complement(make_perm(word, n)), out_word); });
}

int geu_parse_word(geu_ctx* ctx, const char* text, int* out_word, int capacity, int* out_n) {
  return guarded(ctx, [&] {
    require(text != nullptr, "text is null");
    require(out_word != nullptr && out_n != nullptr, "output pointer is null");
    const std::vector<int> word = geu::parse_word(text);
    const geu::Permutation p{word};  // validate before copying out
    require(static_cast<int>(word.size()) <= capacity, "word longer than the buffer");
    std::copy(word.begin(), word.end(), out_word);
    *out_n = p.size();
  });
}

int geu_eulerian(geu_ctx* ctx, int n, int k, char** out) {
  return guarded(ctx, [&] { emit(out, geu::eulerian_analytic(n, k).str()); });
}

int geu_eulerian_recurrence(geu_ctx* ctx, int n, int k, char** out) {
  return guarded(ctx, [&] { emit(out, geu::eulerian_recurrence(ctx->core, n, k).str()); });
}

int geu_general_eulerian(geu_ctx* ctx, int n, int k, const char* a, const char* d, char** out) {
  return guarded(ctx, [&] {
    require(a != nullptr && d != nullptr, "a and d must be decimal strings");
    emit(out, geu::general_eulerian(n, k, geu::parse_exact(a), geu::parse_exact(d)).str());
  });
}

int geu_cnk(geu_ctx* ctx, int n, int k, int j, char** out) {
  return guarded(ctx, [&] { emit(out, geu::cnk_coefficient(ctx->core, n, k, j).str()); });
}

int geu_a_stat(geu_ctx* ctx, int n, int k, long long i, char** out) {
  return guarded(ctx, [&] { emit(out, geu::a_stat(ctx->core, n, k, i).str()); });
}

int geu_q_eulerian(geu_ctx* ctx, int n, int k, char** json_out) {
  return guarded(ctx, [&] {
    const geu::UniPolynomial poly = geu::q_eulerian(ctx->core, n, k);
    nlohmann::ordered_json doc;
    doc["terms"] = nlohmann::ordered_json::array();
    for (const auto& [exponent, coeff] : poly.terms())
      doc["terms"].push_back({exponent, coeff.str()});
    emit(json_out, doc.dump());
  });
}

int geu_count_weak_excedance_class(geu_ctx* ctx, int n, int k, char** out) {
  return guarded(ctx,
                 [&] { emit(out, geu::count_weak_excedance_class(ctx->core, n, k).str()); });
}

int geu_count_w_with_q(geu_ctx* ctx, int n, int k, int lo, int hi, char** out) {
  return guarded(ctx, [&] { emit(out, geu::count_w_with_q(ctx->core, n, k, lo, hi).str()); });
}

int geu_count_set_b(geu_ctx* ctx, int n, int k, int j, char** out) {
  return guarded(ctx, [&] { emit(out, geu::count_set_b(ctx->core, n, k, j).str()); });
}

int geu_inclusion_exclusion_b(geu_ctx* ctx, int n, int k, int j, char** out) {
  return guarded(ctx, [&] { emit(out, geu::inclusion_exclusion_b(n, k, j).str()); });
}

int geu_extraneous_bars(geu_ctx* ctx, int n, int k, const int* compartment_sizes,
                        const int* values, int* out_bars, int* out_count) {
  return guarded(ctx, [&] {
    require(compartment_sizes != nullptr && values != nullptr, "arrangement is null");
    require(out_count != nullptr, "output pointer is null");
    require(k >= 0, "k must be >= 0");
    require(k == 0 || out_bars != nullptr, "output buffer is null");
    std::vector<std::vector<int>> compartments(static_cast<std::size_t>(k) + 1);
    int consumed = 0;
    for (int c = 0; c <= k; ++c) {
      const int size = compartment_sizes[c];
      require(size >= 0 && consumed + size <= n, "compartment sizes do not sum to n");
      compartments[c].assign(values + consumed, values + consumed + size);
      consumed += size;
    }
    require(consumed == n, "compartment sizes do not sum to n");
    const geu::BarArrangement arr = geu::BarArrangement::make(std::move(compartments));
    const std::vector<int> bars = geu::extraneous_bars(arr);
    for (std::size_t i = 0; i < bars.size(); ++i) out_bars[i] = bars[i];
    *out_count = static_cast<int>(bars.size());
  });
}

int geu_verify_main_theorem(geu_ctx* ctx, int n, int k, int j, int* holds) {
  return guarded(ctx, [&] {
    require(holds != nullptr, "output pointer is null");
    *holds = geu::verify_main_theorem(ctx->core, n, k, j) ? 1 : 0;
  });
}

int geu_remark_identity(geu_ctx* ctx, int n, int k, int j, int* holds) {
  return guarded(ctx, [&] {
    require(holds != nullptr, "output pointer is null");
    *holds = geu::remark_identity_holds(n, k, j) ? 1 : 0;
  });
}

int geu_lemma_bijection(geu_ctx* ctx, int n, int k, int j, int* holds) {
  return guarded(ctx, [&] {
    require(holds != nullptr, "output pointer is null");
    *holds = geu::lemma_bijection_check(ctx->core, n, k, j) ? 1 : 0;
  });
}

int geu_verify_cnk_aw_bw(geu_ctx* ctx, int n, int k, int* holds) {
  return guarded(ctx, [&] {
    require(holds != nullptr, "output pointer is null");
    *holds = geu::verify_cnk_aw_bw(ctx->core, n, k) ? 1 : 0;
  });
}

int geu_verify_aw_bw_symmetry(geu_ctx* ctx, int n, int k, int* holds) {
  return guarded(ctx, [&] {
    require(holds != nullptr, "output pointer is null");
    *holds = geu::verify_aw_bw_symmetry(ctx->core, n, k) ? 1 : 0;
  });
}

int geu_verify_insertion(geu_ctx* ctx, int n, int k, int side, int* holds) {
  return guarded(ctx, [&] {
    require(holds != nullptr, "output pointer is null");
    *holds = geu::verify_insertion_recursion(ctx->core, n, k, side_of(side)).ok ? 1 : 0;
  });
}

int geu_render_table(geu_ctx* ctx, const char* kind, int n, int max_n, int k, int j,
                     const char* a, const char* d, int format, char** out) {
  return guarded(ctx, [&] {
    require(kind != nullptr, "kind is null");
    geu::TableSpec spec;
    spec.kind = kind;
    spec.n = n;
    spec.max_n = max_n;
    if (k >= 0) spec.k = k;
    if (j >= 0) spec.j = j;
    if (a != nullptr) spec.a = geu::parse_exact(a);
    if (d != nullptr) spec.d = geu::parse_exact(d);
    emit(out, geu::render_table(ctx->core, spec, format_of(format)));
  });
}

int geu_render_stats(geu_ctx* ctx, const int* word, int n, int format, char** out) {
  return guarded(ctx,
                 [&] { emit(out, geu::render_stats(make_perm(word, n), format_of(format))); });
}

int geu_render_bijection(geu_ctx* ctx, int side, int n, int k, int format, char** out) {
  return guarded(ctx, [&] {
    emit(out, geu::render_bijection(ctx->core, n, k, side_of(side), format_of(format)));
  });
}

int geu_run_verify(geu_ctx* ctx, const char* suite, int max_n, int format, char** report,
                   int* all_passed) {
  return guarded(ctx, [&] {
    require(suite != nullptr, "suite is null");
    require(all_passed != nullptr, "output pointer is null");
    const geu::VerifyReport result = geu::run_suite(ctx->core, suite, max_n);
    emit(report, geu::render_verify(result, format_of(format)));
    *all_passed = result.all_passed() ? 1 : 0;
  });
}

}  // extern "C"
