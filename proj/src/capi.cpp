#include "siso.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "siso/document.hpp"
#include "siso/report.hpp"

using namespace siso;

// The C codes are the library codes by value; appending is the only
// permitted change on either side.
static_assert(SISO_OK == static_cast<int>(Errc::none));
static_assert(SISO_FIELD_MISMATCH == static_cast<int>(Errc::field_mismatch));
static_assert(SISO_NOT_SQUARE_FREE == static_cast<int>(Errc::not_square_free));
static_assert(SISO_BUDGET_EXCEEDED == static_cast<int>(Errc::budget_exceeded));
static_assert(SISO_KEANE_VIOLATION == static_cast<int>(Errc::keane_violation));
static_assert(SISO_INVALID_IET == static_cast<int>(Errc::invalid_iet));
static_assert(SISO_PARSE_ERROR == static_cast<int>(Errc::parse_error));
static_assert(SISO_IO_ERROR == static_cast<int>(Errc::io_error));
static_assert(SISO_USAGE_ERROR == static_cast<int>(Errc::usage_error));
static_assert(SISO_INTERNAL_ERROR == static_cast<int>(Errc::internal_error));

struct siso_doc {
  Document doc;
};

namespace {

thread_local std::string g_message;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
int guarded(F&& body) {
  try {
    body();
    return SISO_OK;
  } catch (const Error& e) {
    g_message = e.what();
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    g_message = e.what();
    return SISO_INTERNAL_ERROR;
  }
}

void need(bool ok, const char* what) {
  require(ok, Errc::usage_error, what);
}

const Document& doc_of(const siso_doc* d) {
  need(d != nullptr, "null document handle");
  return d->doc;
}

// Reports embed the depths and budgets they were produced with.
std::string config_line(const std::string& key, long long value) {
  return key + " = " + std::to_string(value) + "\n";
}

void put(char** out, const std::string& text) {
  need(out != nullptr, "null output parameter");
  char* s = dup_string(text);
  require(s != nullptr, Errc::internal_error, "out of memory");
  *out = s;
}

// "rational" or "quad:<d>", read off the canonical emission.
std::string field_of(const Document& d) {
  std::string text = emit_document(d);
  std::string first = text.substr(0, text.find('\n'));
  if (first == "field rational") return "rational";
  return "quad:" + first.substr(std::string("field quadratic ").size());
}

}  // namespace

extern "C" {

const char* siso_version(void) { return "1.0.0"; }

const char* siso_errc_name(int code) {
  return errc_name(static_cast<Errc>(code));
}

const char* siso_last_message(void) { return g_message.c_str(); }

void siso_string_free(char* s) { std::free(s); }

int siso_read(const char* path, siso_doc** out) {
  return guarded([&] {
    need(path && out, "null argument");
    Document d = read_document(path);
    *out = new siso_doc{std::move(d)};
  });
}

int siso_parse(const char* text, siso_doc** out) {
  return guarded([&] {
    need(text && out, "null argument");
    Document d = parse_document(text);
    *out = new siso_doc{std::move(d)};
  });
}

void siso_free(siso_doc* d) { delete d; }

int siso_is_iet(const siso_doc* d) { return d && d->doc.iet ? 1 : 0; }

int siso_emit(const siso_doc* d, char** out) {
  return guarded([&] { put(out, emit_document(doc_of(d))); });
}

int siso_describe(const siso_doc* d, char** out) {
  return guarded([&] {
    const Document& doc = doc_of(d);
    std::string text = "holds = ";
    if (doc.iet) {
      text += "interval exchange\n" + describe_iet(*doc.iet);
    } else {
      text += "system\n" + describe_system(document_system(doc));
    }
    put(out, text);
  });
}

int siso_field(const siso_doc* d, const char* field, char** out) {
  return guarded([&] {
    std::string have = field_of(doc_of(d));
    if (field)
      require(have == field, Errc::field_mismatch,
              "document field is " + have + ", not " + field);
    put(out, have);
  });
}

int siso_report_gamma(const siso_doc* d, char** out) {
  return guarded([&] { put(out, describe_gamma(document_system(doc_of(d)))); });
}

int siso_dot_gamma(const siso_doc* d, char** out) {
  return guarded([&] { put(out, dot_gamma(document_system(doc_of(d)))); });
}

int siso_report_rips(const siso_doc* d, int max_steps, char** out) {
  return guarded([&] {
    System cur = document_system(doc_of(d));
    need(max_steps >= 1, "max_steps must be >= 1");
    std::string text = config_line("steps requested", max_steps);
    for (int k = 1; k <= max_steps; ++k) {
      RipsResult r = rips_step(cur);
      text += "step = " + std::to_string(k) + "\n" + describe_rips(r);
      cur = r.system;
      if (r.halted) break;
    }
    put(out, text);
  });
}

int siso_report_split(const siso_doc* d, int find_only, char** out) {
  return guarded([&] {
    System s = document_system(doc_of(d));
    std::ostringstream os;
    std::vector<SplittingPoint> pts = find_splitting_points(s);
    if (find_only || pts.empty()) {
      os << "splitting points = " << pts.size() << "\n";
      for (size_t i = 0; i < pts.size(); ++i)
        os << "point " << i + 1 << " = "
           << s.forest().name(pts[i].at.component) << ":" << pts[i].at.p.str()
           << ", base end of " << s.formal_name(pts[i].a0)
           << ", interior to base of " << s.formal_name(pts[i].a1) << "\n";
    } else {
      os << describe_split(s, split_all(s));
    }
    put(out, os.str());
  });
}

int siso_report_induction(const siso_doc* d, int max_steps, char** out) {
  return guarded([&] {
    System s = document_system(doc_of(d));
    need(max_steps >= 1, "max_steps must be >= 1");
    InductionHistory h = run_induction(s, RunConfig{max_steps});
    put(out, describe_induction(h));
  });
}

int siso_report_turns(const siso_doc* d, int legality_L, long long budget,
                      char** out) {
  return guarded([&] {
    System s = document_system(doc_of(d));
    TrainTrack tt = legal_turns(s, legality_L, budget);
    put(out, config_line("budget", budget) + describe_train_track(s, tt));
  });
}

int siso_report_whitehead(const siso_doc* d, int legality_L, long long budget,
                          int* verdict, char** out) {
  return guarded([&] {
    System s = document_system(doc_of(d));
    WhiteheadReport wr = whitehead_report(s, legal_turns(s, legality_L, budget));
    if (verdict) *verdict = wr.all_connected ? SISO_PASS : SISO_FAIL;
    put(out, config_line("budget", budget) + describe_whitehead(s, wr));
  });
}

int siso_dot_whitehead(const siso_doc* d, int legality_L, long long budget,
                       char** out) {
  return guarded([&] {
    System s = document_system(doc_of(d));
    WhiteheadReport wr = whitehead_report(s, legal_turns(s, legality_L, budget));
    put(out, dot_whitehead(s, wr));
  });
}

int siso_report_minimality(const siso_doc* d, int depth_n, int recurrence_R,
                           long long budget, int* verdict, char** out) {
  return guarded([&] {
    System s = document_system(doc_of(d));
    MinimalityReport mr = minimality_diagnostic(s, depth_n, recurrence_R, budget);
    if (verdict) {
      switch (mr.verdict) {
        case Recurrence::pass: *verdict = SISO_PASS; break;
        case Recurrence::fail: *verdict = SISO_FAIL; break;
        case Recurrence::inconclusive: *verdict = SISO_INCONCLUSIVE; break;
      }
    }
    put(out, config_line("budget", budget) + describe_minimality(s, mr));
  });
}

int siso_report_diagonal(const siso_doc* d, int depth_n, long long budget,
                         char** out) {
  return guarded([&] {
    System s = document_system(doc_of(d));
    std::vector<Loc> pts = singular_points(s);
    std::ostringstream os;
    os << config_line("depth", depth_n) << config_line("budget", budget)
       << "singular points = " << pts.size() << "\n";
    for (const Loc& x : pts) {
      LeafSet in = leaf_set_at(s, x, depth_n, budget);
      LeafSet closed = diagonal_closure(in);
      os << "basepoint = " << s.forest().name(x.component) << ":" << x.p.str()
         << "\n"
         << describe_leaf_closure(s, in, closed);
    }
    put(out, os.str());
  });
}

int siso_report_index(const siso_doc* d, int radius_r, long long budget,
                      int* verdict, char** out) {
  return guarded([&] {
    System s = document_system(doc_of(d));
    IndexBoundReport br =
        index_bound_report(s, singular_points(s), radius_r, budget);
    if (verdict)
      *verdict = br.geometric_within && br.q_within ? SISO_PASS : SISO_FAIL;
    put(out, config_line("budget", budget) + describe_index_bounds(s, br));
  });
}

int siso_singular_count(const siso_doc* d, int* out) {
  return guarded([&] {
    need(out != nullptr, "null output parameter");
    *out = static_cast<int>(singular_points(document_system(doc_of(d))).size());
  });
}

int siso_dot_orbit(const siso_doc* d, int which, int radius_r,
                   long long budget, char** out) {
  return guarded([&] {
    System s = document_system(doc_of(d));
    std::vector<Loc> pts = singular_points(s);
    require(which >= 0 && which < static_cast<int>(pts.size()), Errc::bad_index,
            "singular point " + std::to_string(which) + " of " +
                std::to_string(pts.size()));
    put(out, dot_orbit(s, orbit_graph(s, pts[which], radius_r, budget)));
  });
}

int siso_report_rauzy(const siso_doc* d, int max_steps, char** out) {
  return guarded([&] {
    const Document& doc = doc_of(d);
    need(doc.iet.has_value(), "document holds no interval exchange");
    RauzyRun run = rauzy_run(*doc.iet, max_steps);
    put(out, describe_rauzy_run(*doc.iet, run));
  });
}

int siso_report_compare(const siso_doc* d, int steps, int* verdict,
                        char** out) {
  return guarded([&] {
    const Document& doc = doc_of(d);
    need(doc.iet.has_value(), "document holds no interval exchange");
    CompareResult cr = compare_inductions(*doc.iet, steps);
    if (verdict) *verdict = cr.match ? SISO_PASS : SISO_FAIL;
    put(out, describe_comparison(cr));
  });
}

int siso_convert_iet(const siso_doc* d, char** out) {
  return guarded([&] {
    const Document& doc = doc_of(d);
    need(doc.iet.has_value(), "document holds no interval exchange");
    put(out, emit_system(iet_to_system(*doc.iet)));
  });
}

}  // extern "C"
