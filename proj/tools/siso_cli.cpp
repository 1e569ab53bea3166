// Command line front end. Everything goes through the C API in siso.h; the
// C++ core stays behind the shared library boundary.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "siso.h"

namespace {

// Word-enumeration cap shared by all language-driven analyses.
constexpr long long kWordBudget = 4000000;

struct Doc {
  siso_doc* d = nullptr;
  ~Doc() { siso_free(d); }
};

struct Text {
  char* s = nullptr;
  ~Text() { siso_string_free(s); }
  const char* get() const { return s ? s : ""; }
};

int api_error(int rc) {
  std::fprintf(stderr, "error: %s (%s)\n", siso_last_message(),
               siso_errc_name(rc));
  return 2;
}

bool write_file(const std::string& dir, const std::string& name,
                const std::string& text) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream f(dir + "/" + name, std::ios::binary);
  f << text;
  return f.good();
}

// Prints the report, mirrors it into out_dir when set, maps verdicts to
// the exit-code policy: 0 ok, 1 analysis FAIL, 2 could-not-run.
int finish(const std::string& report, const std::string& out_dir,
           int verdict = SISO_PASS) {
  std::fputs(report.c_str(), stdout);
  if (!out_dir.empty() && !write_file(out_dir, "report.txt", report)) {
    std::fprintf(stderr, "error: cannot write %s/report.txt\n",
                 out_dir.c_str());
    return 2;
  }
  return verdict == SISO_FAIL ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"systems of partial isometries on metric forests"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("siso ") + siso_version());

  std::string doc_path, out_dir, field;
  int max_steps = 12, legality_L = 10, depth_n = 3, recurrence_R = 12;
  int radius_r = 4, compare_k = 10;
  bool find_only = false;

  auto add_doc = [&](CLI::App* sub) {
    sub->add_option("doc", doc_path, "input document")->required();
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_dir, "directory for report and exports");
  };

  CLI::App* validate = app.add_subcommand("validate", "parse and validate");
  add_doc(validate);
  validate->add_option("--field", field,
                       "require this scalar field (rational | quad:<d>)");

  CLI::App* gamma = app.add_subcommand("gamma", "associated graph report");
  add_doc(gamma);
  add_out(gamma);

  CLI::App* rips = app.add_subcommand("rips", "trimming moves");
  add_doc(rips);
  add_out(rips);
  rips->add_option("--max-steps", max_steps, "stop after this many moves");

  CLI::App* split = app.add_subcommand("split", "splitting moves");
  add_doc(split);
  add_out(split);
  split->add_flag("--find-only", find_only, "list splitting points only");

  CLI::App* induct = app.add_subcommand("induct", "full induction run");
  add_doc(induct);
  add_out(induct);
  induct->add_option("--max-steps", max_steps, "step budget");

  CLI::App* turns = app.add_subcommand("turns", "legal turns");
  add_doc(turns);
  add_out(turns);
  turns->add_option("--legality-L", legality_L, "witness depth");

  CLI::App* whitehead =
      app.add_subcommand("whitehead", "Whitehead graph connectivity");
  add_doc(whitehead);
  add_out(whitehead);
  whitehead->add_option("--legality-L", legality_L, "witness depth");

  CLI::App* minimality =
      app.add_subcommand("minimality", "uniform recurrence diagnostic");
  add_doc(minimality);
  add_out(minimality);
  minimality->add_option("--depth-n", depth_n, "window length");
  minimality->add_option("--recurrence-R", recurrence_R, "host length");

  CLI::App* diagonal =
      app.add_subcommand("diagonal", "leaf sets and diagonal closure");
  add_doc(diagonal);
  add_out(diagonal);
  diagonal->add_option("--depth-n", depth_n, "half-leaf depth");

  CLI::App* index = app.add_subcommand("index", "index bounds");
  add_doc(index);
  add_out(index);
  index->add_option("--radius-r", radius_r, "orbit ball radius");

  CLI::App* iet = app.add_subcommand("iet", "interval exchange front end");
  iet->require_subcommand(1);
  CLI::App* iet_import =
      iet->add_subcommand("import", "suspend as a system document");
  add_doc(iet_import);
  add_out(iet_import);
  CLI::App* iet_rauzy = iet->add_subcommand("rauzy", "classical induction");
  add_doc(iet_rauzy);
  add_out(iet_rauzy);
  iet_rauzy->add_option("--max-steps", max_steps, "step budget");
  CLI::App* iet_compare =
      iet->add_subcommand("compare", "classical vs derived induction");
  add_doc(iet_compare);
  add_out(iet_compare);
  iet_compare->add_option("--k", compare_k, "steps to compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Doc doc;
  if (int rc = siso_read(doc_path.c_str(), &doc.d)) return api_error(rc);

  if (app.got_subcommand(validate)) {
    Text f, body;
    if (int rc = siso_field(doc.d, field.empty() ? nullptr : field.c_str(),
                            &f.s))
      return api_error(rc);
    if (int rc = siso_describe(doc.d, &body.s)) return api_error(rc);
    return finish(std::string("command = validate\nresult = PASS\nfield = ") +
                      f.get() + "\n" + body.get(),
                  out_dir);
  }

  if (app.got_subcommand(gamma)) {
    Text body, dot;
    if (int rc = siso_report_gamma(doc.d, &body.s)) return api_error(rc);
    if (int rc = siso_dot_gamma(doc.d, &dot.s)) return api_error(rc);
    if (!out_dir.empty() && !write_file(out_dir, "gamma.dot", dot.get())) {
      std::fprintf(stderr, "error: cannot write %s/gamma.dot\n",
                   out_dir.c_str());
      return 2;
    }
    return finish(std::string("command = gamma\n") + body.get(), out_dir);
  }

  if (app.got_subcommand(rips)) {
    Text body;
    if (int rc = siso_report_rips(doc.d, max_steps, &body.s))
      return api_error(rc);
    return finish(std::string("command = rips\n") + body.get(), out_dir);
  }

  if (app.got_subcommand(split)) {
    Text body;
    if (int rc = siso_report_split(doc.d, find_only ? 1 : 0, &body.s))
      return api_error(rc);
    return finish(std::string("command = split\n") + body.get(), out_dir);
  }

  if (app.got_subcommand(induct)) {
    Text body;
    if (int rc = siso_report_induction(doc.d, max_steps, &body.s))
      return api_error(rc);
    return finish(std::string("command = induct\n") + body.get(), out_dir);
  }

  if (app.got_subcommand(turns)) {
    Text body;
    if (int rc = siso_report_turns(doc.d, legality_L, kWordBudget, &body.s))
      return api_error(rc);
    return finish(std::string("command = turns\n") + body.get(), out_dir);
  }

  if (app.got_subcommand(whitehead)) {
    Text body, dot;
    int verdict = SISO_PASS;
    if (int rc = siso_report_whitehead(doc.d, legality_L, kWordBudget,
                                       &verdict, &body.s))
      return api_error(rc);
    if (int rc = siso_dot_whitehead(doc.d, legality_L, kWordBudget, &dot.s))
      return api_error(rc);
    if (!out_dir.empty() && !write_file(out_dir, "whitehead.dot", dot.get())) {
      std::fprintf(stderr, "error: cannot write %s/whitehead.dot\n",
                   out_dir.c_str());
      return 2;
    }
    std::string report = std::string("command = whitehead\n") + body.get() +
                         "verdict = " +
                         (verdict == SISO_PASS ? "PASS" : "FAIL") + "\n";
    return finish(report, out_dir, verdict);
  }

  if (app.got_subcommand(minimality)) {
    Text body;
    int verdict = SISO_PASS;
    if (int rc = siso_report_minimality(doc.d, depth_n, recurrence_R,
                                        kWordBudget, &verdict, &body.s))
      return api_error(rc);
    return finish(std::string("command = minimality\n") + body.get(), out_dir,
                  verdict);
  }

  if (app.got_subcommand(diagonal)) {
    Text body;
    if (int rc = siso_report_diagonal(doc.d, depth_n, kWordBudget, &body.s))
      return api_error(rc);
    return finish(std::string("command = diagonal\n") + body.get(), out_dir);
  }

  if (app.got_subcommand(index)) {
    Text body;
    int verdict = SISO_PASS;
    if (int rc = siso_report_index(doc.d, radius_r, kWordBudget, &verdict,
                                   &body.s))
      return api_error(rc);
    if (!out_dir.empty()) {
      int count = 0;
      if (int rc = siso_singular_count(doc.d, &count)) return api_error(rc);
      for (int k = 0; k < count; ++k) {
        Text dot;
        if (int rc =
                siso_dot_orbit(doc.d, k, radius_r, kWordBudget, &dot.s))
          return api_error(rc);
        std::string name = "orbit_" + std::to_string(k) + ".dot";
        if (!write_file(out_dir, name, dot.get())) {
          std::fprintf(stderr, "error: cannot write %s/%s\n", out_dir.c_str(),
                       name.c_str());
          return 2;
        }
      }
    }
    std::string report = std::string("command = index\n") + body.get() +
                         "verdict = " +
                         (verdict == SISO_PASS ? "PASS" : "FAIL") + "\n";
    return finish(report, out_dir, verdict);
  }

  if (app.got_subcommand(iet)) {
    if (iet->got_subcommand(iet_import)) {
      Text body;
      if (int rc = siso_convert_iet(doc.d, &body.s)) return api_error(rc);
      std::fputs(body.get(), stdout);
      if (!out_dir.empty() &&
          !write_file(out_dir, "suspension.sys", body.get())) {
        std::fprintf(stderr, "error: cannot write %s/suspension.sys\n",
                     out_dir.c_str());
        return 2;
      }
      return 0;
    }
    if (iet->got_subcommand(iet_rauzy)) {
      Text body;
      if (int rc = siso_report_rauzy(doc.d, max_steps, &body.s))
        return api_error(rc);
      return finish(std::string("command = iet rauzy\n") + body.get(),
                    out_dir);
    }
    Text body;
    int verdict = SISO_PASS;
    if (int rc = siso_report_compare(doc.d, compare_k, &verdict, &body.s))
      return api_error(rc);
    std::string report = std::string("command = iet compare\n") + body.get() +
                         "verdict = " +
                         (verdict == SISO_PASS ? "MATCH" : "MISMATCH") + "\n";
    return finish(report, out_dir, verdict);
  }

  return 2;
}
