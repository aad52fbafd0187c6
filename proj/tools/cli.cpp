#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "jeopardy/analysis.hpp"
#include "jeopardy/desugar.hpp"
#include "jeopardy/evaluator.hpp"
#include "jeopardy/labeler.hpp"
#include "jeopardy/parser.hpp"
#include "jeopardy/printer.hpp"
#include "jeopardy/report.hpp"
#include "jeopardy/validate.hpp"

namespace jeopardy::cli {

namespace {

struct Options {
  std::string command;
  std::string path;
  std::string input;
  std::string format = "text";
  bool trace = false;
  bool show_labels = false;
  std::size_t max_calls = EvalOptions{}.max_calls;
};

/// Failure that maps directly to an exit code; the message is already printed.
struct Exit {
  int code;
};

class Session {
 public:
  Session(const Options& options, std::ostream& out, std::ostream& err)
      : options_(options), out_(out), err_(err) {}

  int run() {
    try {
      read_source();
      const Program sugared = parse();
      if (options_.command == "parse") {
        out_ << print_program(sugared);
        return kSuccess;
      }
      const Program core = desugar(sugared);
      if (options_.command == "desugar") {
        out_ << print_program(core);
        return kSuccess;
      }
      const LabeledProgram labeled = annotate(core);
      if (options_.command == "label") return label(labeled);
      if (options_.command == "analyze") return analyze(labeled);
      return run(labeled);
    } catch (const Exit& exit) {
      return exit.code;
    }
  }

 private:
  [[noreturn]] void fail(int code, const std::string& message) {
    err_ << message << "\n";
    throw Exit{code};
  }

  void read_source() {
    std::ifstream file(options_.path, std::ios::binary);
    if (!file) fail(kIoError, options_.path + ": cannot open file");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    if (file.bad()) fail(kIoError, options_.path + ": read error");
    source_ = buffer.str();
  }

  Program parse() {
    Program program;
    try {
      program = parse_program(source_);
    } catch (const ParseError& e) {
      fail(kDiagnostics,
           source_location(source_, options_.path, e.span().begin) + " ParseError: " + e.what());
    }
    const std::vector<Diagnostic> diagnostics = validate(program);
    if (!diagnostics.empty()) {
      for (const Diagnostic& d : diagnostics) err_ << format_diagnostic(d, source_, options_.path) << "\n";
      throw Exit{kDiagnostics};
    }
    return program;
  }

  Program desugar(const Program& program) {
    try {
      return desugar_program(program);
    } catch (const DesugarError& e) {
      fail(kDiagnostics, options_.path + ": DesugarError: " + e.what());
    }
  }

  int label(const LabeledProgram& labeled) {
    if (options_.format == "json") {
      out_ << render_json(labeled, {}, {})["labels"].dump(2) << "\n";
    } else {
      out_ << print_program(labeled.program(), PrintOptions{true});
    }
    return kSuccess;
  }

  int analyze(const LabeledProgram& labeled) {
    const analysis::ConfigurationSet configs = analysis::configurations(labeled);
    const std::vector<analysis::Hint> hints = analysis::symmetry_hints(labeled, configs);
    if (options_.format == "json") {
      out_ << render_json(labeled, configs, hints).dump(2) << "\n";
      return kSuccess;
    }
    if (options_.show_labels) out_ << print_program(labeled.program(), PrintOptions{true}) << "\n";
    out_ << render_text(configs, hints);
    return kSuccess;
  }

  int run(const LabeledProgram& labeled) {
    if (options_.input.empty()) fail(kUsage, "run: missing input value");
    Value input;
    try {
      input = parse_value(options_.input, labeled.program());
    } catch (const ParseError& e) {
      fail(kDiagnostics, source_location(options_.input, "<input>", e.span().begin) +
                             " ParseError: " + e.what());
    } catch (const ValueError& e) {
      fail(kDiagnostics, format_diagnostic(e.diagnostic(), options_.input, "<input>"));
    }

    EvalOptions eval_options;
    eval_options.max_calls = options_.max_calls;
    RunResult result;
    try {
      result = run_main(labeled, input, eval_options);
    } catch (const RuntimeError& e) {
      fail(kRuntimeError, std::string("RuntimeError: ") + e.what());
    }

    if (options_.format == "json") {
      nlohmann::ordered_json doc;
      doc["value"] = print_value(result.value);
      if (options_.trace) {
        nlohmann::ordered_json& events = doc["trace"] = nlohmann::ordered_json::array();
        for (const CallEvent& event : result.trace) {
          events.push_back({{"caller", event.caller},
                            {"callee", event.callee},
                            {"argument", print_value(event.argument)},
                            {"application_label", label_json(event.application_label)}});
        }
      }
      out_ << doc.dump(2) << "\n";
      return kSuccess;
    }
    out_ << print_value(result.value) << "\n";
    if (options_.trace) {
      for (const CallEvent& event : result.trace) {
        out_ << event.caller << " -> " << event.callee << " at "
             << event.application_label.to_string() << ": " << print_value(event.argument) << "\n";
      }
    }
    return kSuccess;
  }

  const Options& options_;
  std::ostream& out_;
  std::ostream& err_;
  std::string source_;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options options;
  CLI::App app{"Available implicit arguments analysis for Jeopardy programs", "jeopardy-iaa"};
  app.add_option("command", options.command, "parse, desugar, label, analyze or run")
      ->required()
      ->check(CLI::IsMember({"parse", "desugar", "label", "analyze", "run"}));
  app.add_option("file", options.path, "Jeopardy source file")->required();
  app.add_option("input", options.input, "Input value for run, e.g. 3 or \"[successor [zero]]\"");
  app.add_option("--format", options.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--trace", options.trace, "Print the call trace (run)");
  app.add_flag("--show-labels", options.show_labels, "Print the labeled program (analyze)");
  app.add_option("--max-calls", options.max_calls, "Call limit for run")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }
  return Session(options, out, err).run();
}

}  // namespace jeopardy::cli
