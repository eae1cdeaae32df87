#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quadres/complex.hpp"
#include "quadres/diagram.hpp"
#include "quadres/errors.hpp"
#include "quadres/ext.hpp"
#include "quadres/homology.hpp"
#include "quadres/oracles.hpp"
#include "quadres/ring.hpp"

namespace {

using namespace quadres;

constexpr int kExitInvalidInput = 2;
constexpr int kExitAnomaly = 3;

struct Options {
    std::string ring_path;
    int initial = 1;
    int levels = 8;
    int max_degree = -1;  // default: levels + 4
    std::string field_text = "fp:32003";
    std::string out;
    int max_vars = 4;
    bool dot = false;
};

FieldChoice parse_field(const Options& opt) {
    FieldChoice field = FieldChoice::parse(opt.field_text);
    if (field.kind == FieldKind::Prime && field.p == 2)
        std::cerr << "warning: over fp:2 all signs coincide, so sign convention errors"
                     " cannot be observed; prefer an odd prime\n";
    return field;
}

int degree_bound(const Options& opt) { return opt.max_degree >= 0 ? opt.max_degree : opt.levels + 4; }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInputError("cannot write file: " + path);
    out << content;
}

int cmd_build(const Options& opt) {
    const RingSpec spec = load_ring_spec(opt.ring_path);
    const Diagram d = build_diagram(spec, opt.initial, opt.levels);
    const FreeComplex c = from_diagram(d);
    const std::string prefix = opt.out.empty() ? "out" : opt.out;
    write_file(prefix + ".diagram.json", diagram_to_json(d));
    write_file(prefix + ".complex.json", complex_to_json(c));
    if (opt.dot) write_file(prefix + ".dot", diagram_to_dot(d));
    std::cout << "ring: " << spec.to_string() << "\ninitial: x" << opt.initial << "\nranks:";
    for (int r : c.ranks) std::cout << " " << r;
    std::cout << "\nwrote " << prefix << ".diagram.json, " << prefix << ".complex.json"
              << (opt.dot ? ", " + prefix + ".dot" : "") << "\n";
    return 0;
}

int cmd_check(const Options& opt) {
    const RingSpec spec = load_ring_spec(opt.ring_path);
    const FreeComplex c = from_diagram(build_diagram(spec, opt.initial, opt.levels));
    bool all_zero = true;
    for (int n = 2; n <= c.length(); ++n) {
        const DDWitness w = verify_dd_zero(c, n);
        if (w.zero) {
            std::cout << "d" << n - 1 << " o d" << n << " = 0\n";
        } else {
            all_zero = false;
            std::cout << "{\"error\":\"dd_nonzero\",\"level\":" << n << ",\"row\":" << w.row
                      << ",\"col\":" << w.col << ",\"element\":\"" << w.element << "\"}\n";
        }
    }
    std::cout << (all_zero ? "all composites vanish\n" : "composite check FAILED\n");
    return all_zero ? 0 : kExitAnomaly;
}

int cmd_homology(const Options& opt) {
    const RingSpec spec = load_ring_spec(opt.ring_path);
    const FieldChoice field = parse_field(opt);
    const FreeComplex c = from_diagram(build_diagram(spec, opt.initial, opt.levels));
    const ExactnessReport rep = exactness_report(c, degree_bound(opt), field);
    if (!opt.out.empty()) {
        write_file(opt.out + ".tsv", rep.to_tsv());
        write_file(opt.out + ".json", rep.to_json());
    }
    std::cout << rep.to_tsv();
    std::cout << "# " << rep.truncation_note << "\n";
    std::cout << "# h0 matches R/(x" << opt.initial
              << "): " << (h0_check(c, degree_bound(opt), field) ? "yes" : "NO") << "\n";
    std::cout << "# verdict: "
              << (rep.consistent ? "consistent with exactness" : "NONZERO HOMOLOGY FOUND") << "\n";
    return rep.consistent ? 0 : kExitAnomaly;
}

int cmd_ext(const Options& opt) {
    const RingSpec spec = load_ring_spec(opt.ring_path);
    const FieldChoice field = parse_field(opt);
    const ExtEvidence ev =
        injective_dimension_evidence(spec, opt.initial, opt.levels, field, opt.max_degree);
    if (!opt.out.empty()) write_file(opt.out + ".json", ev.to_json());
    std::cout << ev.to_json();
    std::cout << "nonzero cohomology at " << ev.nonzero_positions.size() << " position(s), "
              << ev.occurrences.size() << " vv occurrence(s), detector sound\n";
    return 0;
}

int cmd_oracle(const Options& opt) {
    const RingSpec spec = load_ring_spec(opt.ring_path);
    const FieldChoice field = parse_field(opt);
    const auto kind = detect_oracle(spec);
    if (!kind) throw InvalidInputError("no closed-form reference complex for this ring");
    if (opt.initial != 1)
        throw InvalidInputError("reference complexes start from multiplication by x1");
    const FreeComplex built = from_diagram(build_diagram(spec, 1, opt.levels));
    const FreeComplex reference = oracle_complex(*kind, opt.levels);
    const CompareVerdict v = compare_complexes(built, reference, degree_bound(opt), field);
    std::cout << "reference: " << kind->to_string() << "\n"
              << (v.equal ? "equal: rank sequences and graded homology tables agree\n"
                          : "MISMATCH: " + v.detail + "\n");
    return v.equal ? 0 : kExitAnomaly;
}

int cmd_hunt(const Options& opt) {
    const FieldChoice field = parse_field(opt);
    const HuntResult res = conjecture_hunt(opt.max_vars, opt.levels, opt.max_degree, field);
    for (const auto& a : res.anomalies) {
        std::cout << "anomaly[" << a.kind << "] ring=" << a.spec.to_string()
                  << " initial=x" << a.initial;
        if (a.kind == "nonzero_homology")
            std::cout << " n=" << a.n << " t=" << a.t << " dim=" << a.value;
        if (!a.detail.empty()) std::cout << " detail=" << a.detail;
        std::cout << "\n";
    }
    std::cout << res.anomalies.size() << " anomalies, " << res.cases << " cases verified\n";
    return res.anomalies.empty() ? 0 : kExitAnomaly;
}

int cmd_hilbert(const Options& opt) {
    const RingSpec spec = load_ring_spec(opt.ring_path);
    const int T = opt.max_degree >= 0 ? opt.max_degree : 12;
    std::ostringstream os;
    os << "degree\tdim\n";
    const auto dims = hilbert_function(spec, T);
    for (int d = 0; d <= T; ++d) os << d << '\t' << dims[static_cast<std::size_t>(d)] << '\n';
    if (!opt.out.empty()) write_file(opt.out, os.str());
    std::cout << os.str();
    return 0;
}

int cmd_export_dot(const Options& opt) {
    const RingSpec spec = load_ring_spec(opt.ring_path);
    const Diagram d = build_diagram(spec, opt.initial, opt.levels);
    const std::string dot = diagram_to_dot(d);
    if (!opt.out.empty())
        write_file(opt.out, dot);
    else
        std::cout << dot;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial free chain complexes over quadratic monomial quotient rings"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool needs_ring) {
        if (needs_ring)
            sub->add_option("--ring", opt.ring_path, "ring spec JSON file")->required();
        sub->add_option("--initial", opt.initial, "initial variable index (1-based)");
        sub->add_option("--levels", opt.levels, "levels to build above degree 0");
        sub->add_option("--max-degree", opt.max_degree, "largest internal degree examined");
        sub->add_option("--field", opt.field_text, "coefficient field: q | fp:<prime>");
        sub->add_option("--out", opt.out, "output path or prefix");
    };

    auto* build = app.add_subcommand("build", "run the construction, write diagram + complex JSON");
    add_common(build, true);
    build->add_flag("--dot", opt.dot, "also write a DOT rendering");
    auto* check = app.add_subcommand("check", "verify d o d = 0 on every level");
    add_common(check, true);
    auto* homology = app.add_subcommand("homology", "graded exactness report");
    add_common(homology, true);
    auto* ext = app.add_subcommand("ext", "dual-complex cohomology and vv-pattern evidence");
    add_common(ext, true);
    auto* oracle = app.add_subcommand("oracle", "compare a build against its reference complex");
    add_common(oracle, true);
    auto* hunt = app.add_subcommand("hunt", "exactness sweep over all small rings");
    hunt->add_option("--max-vars", opt.max_vars, "largest variable count (<= 4)");
    hunt->add_option("--levels", opt.levels, "levels to build per case")->default_val(6);
    hunt->add_option("--max-degree", opt.max_degree, "largest internal degree examined")
        ->default_val(8);
    hunt->add_option("--field", opt.field_text, "coefficient field: q | fp:<prime>");
    auto* hilbert = app.add_subcommand("hilbert", "dimensions of the graded pieces of R");
    add_common(hilbert, true);
    auto* export_dot = app.add_subcommand("export-dot", "DOT rendering of the diagram");
    add_common(export_dot, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidInput;
    }

    try {
        if (build->parsed()) return cmd_build(opt);
        if (check->parsed()) return cmd_check(opt);
        if (homology->parsed()) return cmd_homology(opt);
        if (ext->parsed()) return cmd_ext(opt);
        if (oracle->parsed()) return cmd_oracle(opt);
        if (hunt->parsed()) return cmd_hunt(opt);
        if (hilbert->parsed()) return cmd_hilbert(opt);
        if (export_dot->parsed()) return cmd_export_dot(opt);
    } catch (const SignConflictError& e) {
        std::cout << "{\"error\":\"sign_conflict\",\"cycle\":\"" << e.cycle << "\"}\n";
        std::cerr << "error: " << e.what() << "\n";
        return kExitAnomaly;
    } catch (const InternalConsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAnomaly;
    } catch (const InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return 0;
}
