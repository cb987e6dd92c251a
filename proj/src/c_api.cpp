#include "thompson/thompson.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "thompson/acceptance.hpp"
#include "thompson/action.hpp"
#include "thompson/certificate.hpp"
#include "thompson/constructions.hpp"
#include "thompson/error.hpp"
#include "thompson/report.hpp"

struct tf_element {
  thompson::Element value;
};

namespace {

thread_local std::string last_error;

tf_status status_of(thompson::ErrorCode code) {
  using thompson::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return TF_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return TF_ERR_PARSE;
    case ErrorCode::WordTooShort: return TF_ERR_WORD_TOO_SHORT;
    case ErrorCode::NotACopy: return TF_ERR_NOT_A_COPY;
    case ErrorCode::NotInImage: return TF_ERR_NOT_IN_IMAGE;
    case ErrorCode::ArityTooSmall: return TF_ERR_ARITY_TOO_SMALL;
    case ErrorCode::EmptyClass: return TF_ERR_EMPTY_CLASS;
    case ErrorCode::TooLarge: return TF_ERR_TOO_LARGE;
  }
  return TF_ERR_INTERNAL;
}

tf_status fail(tf_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
tf_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return TF_OK;
  } catch (const thompson::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TF_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) throw thompson::Error(thompson::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

tf_element* wrap(thompson::Element e) { return new tf_element{std::move(e)}; }

}  // namespace

extern "C" {

const char* tf_status_name(tf_status status) {
  switch (status) {
    case TF_OK: return "ok";
    case TF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TF_ERR_PARSE: return "parse error";
    case TF_ERR_WORD_TOO_SHORT: return "word too short";
    case TF_ERR_NOT_A_COPY: return "not a copy";
    case TF_ERR_NOT_IN_IMAGE: return "not in image";
    case TF_ERR_ARITY_TOO_SMALL: return "arity too small";
    case TF_ERR_EMPTY_CLASS: return "empty class";
    case TF_ERR_TOO_LARGE: return "too large";
    case TF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* tf_last_error_message(void) { return last_error.c_str(); }

const char* tf_version(void) { return "1.0.0"; }

void tf_string_free(char* s) { std::free(s); }

tf_status tf_element_parse(const char* text, tf_element** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = wrap(thompson::Element::parse(text));
  });
}

tf_status tf_element_identity(tf_element** out) {
  return guarded([&] {
    need(out, "out");
    *out = wrap(thompson::Element());
  });
}

tf_status tf_element_generator(unsigned index, tf_element** out) {
  return guarded([&] {
    need(out, "out");
    *out = wrap(thompson::generator(index));
  });
}

tf_status tf_element_clone(const tf_element* e, tf_element** out) {
  return guarded([&] {
    need(e, "element");
    need(out, "out");
    *out = wrap(e->value);
  });
}

void tf_element_free(tf_element* e) { delete e; }

tf_status tf_element_multiply(const tf_element* a, const tf_element* b, tf_element** out) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    need(out, "out");
    *out = wrap(thompson::multiply(a->value, b->value));
  });
}

tf_status tf_element_invert(const tf_element* a, tf_element** out) {
  return guarded([&] {
    need(a, "a");
    need(out, "out");
    *out = wrap(thompson::invert(a->value));
  });
}

tf_status tf_element_power(const tf_element* a, long long exponent, tf_element** out) {
  return guarded([&] {
    need(a, "a");
    need(out, "out");
    *out = wrap(thompson::power(a->value, exponent));
  });
}

tf_status tf_element_size(const tf_element* e, size_t* out) {
  return guarded([&] {
    need(e, "element");
    need(out, "out");
    *out = e->value.size();
  });
}

tf_status tf_element_equal(const tf_element* a, const tf_element* b, int* out) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    need(out, "out");
    *out = a->value == b->value;
  });
}

tf_status tf_element_serialize(const tf_element* e, char** out) {
  return guarded([&] {
    need(e, "element");
    need(out, "out");
    *out = copy_string(e->value.serialize());
  });
}

tf_status tf_apply_to_word(const tf_element* e, const char* word, char** out) {
  return guarded([&] {
    need(e, "element");
    need(word, "word");
    need(out, "out");
    *out = copy_string(thompson::apply_to_word(e->value, thompson::BinaryWord(word)).str());
  });
}

tf_status tf_has_branch_pair(const tf_element* e, const char* u, const char* v, int* out) {
  return guarded([&] {
    need(e, "element");
    need(u, "u");
    need(v, "v");
    need(out, "out");
    *out = thompson::has_branch_pair(e->value, thompson::BinaryWord(u), thompson::BinaryWord(v));
  });
}

tf_status tf_fixes_interval(const tf_element* e, const char* u, int* out) {
  return guarded([&] {
    need(e, "element");
    need(u, "u");
    need(out, "out");
    *out = thompson::fixes_interval(e->value, thompson::BinaryWord(u));
  });
}

tf_status tf_ab(const tf_element* e, long long* a, long long* b) {
  return guarded([&] {
    need(e, "element");
    need(a, "a");
    need(b, "b");
    const auto image = thompson::ab(e->value);
    *a = image.a;
    *b = image.b;
  });
}

tf_status tf_copy_in(const tf_element* g, const char* v, tf_element** out) {
  return guarded([&] {
    need(g, "element");
    need(v, "v");
    need(out, "out");
    *out = wrap(thompson::copy_in(g->value, thompson::BinaryWord(v)));
  });
}

tf_status tf_strip_copy(const tf_element* f, const char* v, tf_element** out) {
  return guarded([&] {
    need(f, "element");
    need(v, "v");
    need(out, "out");
    *out = wrap(thompson::strip_copy(f->value, thompson::BinaryWord(v)));
  });
}

tf_status tf_phi1(const tf_element* g, tf_element** out) {
  return guarded([&] {
    need(g, "element");
    need(out, "out");
    *out = wrap(thompson::phi1(g->value));
  });
}

tf_status tf_phi2(const tf_element* g, tf_element** out) {
  return guarded([&] {
    need(g, "element");
    need(out, "out");
    *out = wrap(thompson::phi2(g->value));
  });
}

tf_status tf_certify(const tf_element* const* gens, size_t count, size_t depth, int* verdict) {
  return guarded([&] {
    need(verdict, "verdict");
    if (count) need(gens, "gens");
    std::vector<thompson::Element> list;
    for (size_t i = 0; i < count; ++i) {
      need(gens[i], "generator");
      list.push_back(gens[i]->value);
    }
    switch (thompson::certify_generates_F(list, depth).kind) {
      case thompson::VerdictKind::Generates: *verdict = 0; break;
      case thompson::VerdictKind::NotGenerating: *verdict = 1; break;
      case thompson::VerdictKind::Unknown: *verdict = 2; break;
    }
  });
}

tf_status tf_report_count_csv(unsigned max_n, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = copy_string(thompson::count_csv(max_n));
  });
}

tf_status tf_report_sphere(unsigned k, unsigned n, const char* model, int meta, char** out) {
  return guarded([&] {
    need(model, "model");
    need(out, "out");
    *out = copy_string(thompson::sphere_json(k, n, thompson::parse_model(model), meta != 0));
  });
}

tf_status tf_report_density(unsigned k, unsigned n, const char* model, int meta, char** out) {
  return guarded([&] {
    need(model, "model");
    need(out, "out");
    *out = copy_string(thompson::density_json(k, n, thompson::parse_model(model), meta != 0));
  });
}

tf_status tf_report_certify(const char* gens, size_t depth, int meta, char** out) {
  return guarded([&] {
    need(gens, "gens");
    need(out, "out");
    *out = copy_string(thompson::certify_json(thompson::parse_element_list(gens), depth, meta != 0));
  });
}

tf_status tf_report_experiment(unsigned k, unsigned n, const char* model, unsigned long long samples, size_t depth,
                               unsigned long long seed, unsigned threads, int meta, char** out) {
  return guarded([&] {
    need(model, "model");
    need(out, "out");
    thompson::ExperimentConfig cfg;
    cfg.k = k;
    cfg.n = n;
    cfg.model = thompson::parse_model(model);
    cfg.samples = samples;
    cfg.depth = depth;
    cfg.seed = seed;
    cfg.threads = threads;
    *out = copy_string(thompson::experiment_json(cfg, meta != 0));
  });
}

tf_status tf_report_nat(const char* gens, const char* u, unsigned k, int meta, char** out) {
  return guarded([&] {
    need(gens, "gens");
    need(u, "u");
    need(out, "out");
    *out = copy_string(thompson::nat_json(thompson::parse_element_list(gens), thompson::BinaryWord(u), k, meta != 0));
  });
}

tf_status tf_run_acceptance(const int* ids, size_t count, unsigned threads, tf_acceptance_callback callback,
                            void* user, int* all_passed) {
  return guarded([&] {
    need(all_passed, "all_passed");
    if (count) need(ids, "ids");
    thompson::AcceptanceOptions options;
    options.only.assign(ids, ids + count);
    options.threads = threads;
    bool ok = true;
    thompson::run_acceptance(options, [&](const thompson::CriterionResult& r) {
      ok = ok && r.passed;
      if (callback) callback(r.id, r.passed ? 1 : 0, thompson::format_result(r).c_str(), user);
    });
    *all_passed = ok ? 1 : 0;
  });
}

}  // extern "C"
