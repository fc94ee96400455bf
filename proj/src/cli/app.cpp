#include "shaclgap/cli/app.hpp"

#include "shaclgap/cli/render.hpp"
#include "shaclgap/gap/diagnose.hpp"
#include "shaclgap/shacl/compile.hpp"
#include "shaclgap/turtle/parser.hpp"
#include "shaclgap/validator/validate.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace shaclgap::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violations = 1;
constexpr int exit_input_error = 2;
constexpr int exit_usage = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<turtle::Document> parse_files(const std::vector<std::string>& paths) {
    std::vector<turtle::Document> docs;
    for (const auto& path : paths) {
        try {
            docs.push_back(turtle::parse(read_file(path)));
        } catch (const turtle::ParseError& e) {
            throw InputError(path + ":" + e.what());
        }
    }
    return docs;
}

// A name on the command line: <iri>, a declared prefixed name, or a bare
// absolute IRI. A prefix declared with conflicting namespaces across the
// input files is a usage error when used.
rdf::Iri resolve_name(const std::string& text, const std::vector<turtle::Document>& docs) {
    if (text.size() >= 2 && text.front() == '<' && text.back() == '>')
        return rdf::Iri{text.substr(1, text.size() - 2)};
    auto colon = text.find(':');
    if (colon != std::string::npos && colon > 0) {
        const std::string label = text.substr(0, colon);
        std::vector<rdf::Iri> namespaces;
        for (const auto& doc : docs) {
            if (auto ns = doc.prefixes.find(label)) {
                if (std::find(namespaces.begin(), namespaces.end(), *ns) == namespaces.end())
                    namespaces.push_back(*ns);
            }
        }
        if (namespaces.size() > 1)
            throw UsageError("prefix '" + label + ":' is declared with " +
                             std::to_string(namespaces.size()) + " different namespaces");
        if (namespaces.size() == 1)
            return rdf::Iri{namespaces.front().value + text.substr(colon + 1)};
    }
    // Default-namespace names like ":sailor1".
    if (colon == 0) {
        std::vector<rdf::Iri> namespaces;
        for (const auto& doc : docs) {
            if (auto ns = doc.prefixes.find("")) {
                if (std::find(namespaces.begin(), namespaces.end(), *ns) == namespaces.end())
                    namespaces.push_back(*ns);
            }
        }
        if (namespaces.size() > 1) throw UsageError("the default prefix ':' is ambiguous");
        if (namespaces.size() == 1)
            return rdf::Iri{namespaces.front().value + text.substr(1)};
        throw InputError("the default prefix ':' is not declared");
    }
    // Bare absolute IRI.
    if (colon != std::string::npos) return rdf::Iri{text};
    throw InputError("cannot resolve '" + text + "': no such prefix and not an absolute IRI");
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw InputError("cannot write file: " + out_path);
    file << text;
}

struct Options {
    std::vector<std::string> shapes_paths;
    std::vector<std::string> data_paths;
    std::string format;
    std::string focus;
    std::string shape;
    std::string out_path;
};

int cmd_validate(const Options& opt, std::ostream& out) {
    auto shape_docs = parse_files(opt.shapes_paths);
    auto data_docs = parse_files(opt.data_paths);
    turtle::Document shapes_doc = turtle::merge(shape_docs);
    turtle::Document data_doc = turtle::merge(data_docs);

    shacl::ShapesGraph shapes = shacl::discover(shapes_doc);
    validator::ValidationReport report = validator::validate(shapes, data_doc.graph);

    std::string rendered;
    if (opt.format == "turtle") {
        rdf::PrefixMap prefixes = shapes_doc.prefixes;
        for (const auto& entry : data_doc.prefixes.entries())
            prefixes.declare(entry.label, entry.ns);
        rendered = render_report_turtle(report, prefixes);
    } else if (opt.format == "json") {
        rendered = render_report_json(report);
    } else {
        rendered = render_report_text(report);
    }
    write_output(rendered, opt.out_path, out);
    return report.conforms ? exit_ok : exit_violations;
}

int cmd_gap(const Options& opt, std::ostream& out) {
    auto shape_docs = parse_files(opt.shapes_paths);
    auto data_docs = parse_files(opt.data_paths);
    turtle::Document shapes_doc = turtle::merge(shape_docs);
    turtle::Document data_doc = turtle::merge(data_docs);

    std::vector<turtle::Document> all;
    for (const auto& d : shape_docs) all.push_back(d);
    for (const auto& d : data_docs) all.push_back(d);

    rdf::Term focus = rdf::Term(resolve_name(opt.focus, all));
    rdf::Term shape_id = rdf::Term(resolve_name(opt.shape, all));

    shacl::ShapesGraph shapes = shacl::discover(shapes_doc);
    gap::GapReport report;
    try {
        report = gap::diagnose(shapes, shape_id, focus, data_doc.graph);
    } catch (const gap::GapError& e) {
        throw InputError(e.what());
    }

    std::string rendered =
        opt.format == "json" ? render_gap_json(report) : render_gap_text(report);
    write_output(rendered, opt.out_path, out);
    return report.conforms ? exit_ok : exit_violations;
}

int cmd_inspect(const Options& opt, std::ostream& out) {
    auto shape_docs = parse_files(opt.shapes_paths);
    turtle::Document shapes_doc = turtle::merge(shape_docs);
    shacl::ShapesGraph shapes = shacl::discover(shapes_doc);
    write_output(render_inspect(shapes, shapes_doc.prefixes), opt.out_path, out);
    return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed-world SHACL validation and compliance gap analysis for RDF graphs"};
    app.require_subcommand(1);

    Options opt;

    auto* validate_cmd =
        app.add_subcommand("validate", "Validate data graphs against a shapes graph");
    validate_cmd->add_option("--shapes", opt.shapes_paths, "Turtle shapes files")
        ->required()
        ->expected(-1);
    validate_cmd->add_option("--data", opt.data_paths, "Turtle data files")->expected(-1);
    validate_cmd->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"turtle", "json", "text"}))
        ->default_val("text");
    validate_cmd->add_option("--out", opt.out_path, "Write the report to a file");

    auto* gap_cmd = app.add_subcommand("gap", "Diagnose missing requirements for a focus node");
    gap_cmd->add_option("--shapes", opt.shapes_paths, "Turtle shapes files")
        ->required()
        ->expected(-1);
    gap_cmd->add_option("--data", opt.data_paths, "Turtle data files")->expected(-1);
    gap_cmd->add_option("--focus", opt.focus, "Focus node IRI or prefixed name")->required();
    gap_cmd->add_option("--shape", opt.shape, "Node shape IRI or prefixed name")->required();
    gap_cmd->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->default_val("text");
    gap_cmd->add_option("--out", opt.out_path, "Write the report to a file");

    auto* inspect_cmd = app.add_subcommand("inspect", "List the compiled shapes");
    inspect_cmd->add_option("--shapes", opt.shapes_paths, "Turtle shapes files")
        ->required()
        ->expected(-1);
    inspect_cmd->add_option("--out", opt.out_path, "Write the listing to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(opt, out);
        if (gap_cmd->parsed()) return cmd_gap(opt, out);
        return cmd_inspect(opt, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const shacl::CompileError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const turtle::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

}  // namespace shaclgap::cli
