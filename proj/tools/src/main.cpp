#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "aak/decide.hpp"
#include "aak/diagram.hpp"
#include "aak/errors.hpp"
#include "aak/generate.hpp"
#include "aak/oracle.hpp"
#include "aak/pd.hpp"
#include "aak/recognition.hpp"

namespace {

// One diagram per non-empty, non-comment input line.
std::vector<std::string> read_pd_lines(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file) throw aak::input_error("cannot open file: " + path);
        in = &file;
    }
    std::vector<std::string> out;
    std::string line;
    while (std::getline(*in, line)) {
        std::string t = line;
        if (auto pos = t.find('#'); pos != std::string::npos) t = t.substr(0, pos);
        size_t a = t.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        size_t b = t.find_last_not_of(" \t\r\n");
        out.push_back(t.substr(a, b - a + 1));
    }
    return out;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw aak::input_error("cannot open output file: " + path);
    return file;
}

int run_validate(const std::string& path) {
    for (const std::string& line : read_pd_lines(path)) {
        aak::Diagram d = aak::parse_pd(line);
        aak::Recognition rec = aak::recognize(d);
        auto b = [](bool v) { return v ? "true" : "false"; };
        std::cout << "connected: " << b(rec.connected) << '\n'
                  << "knot: " << b(rec.knot) << '\n'
                  << "reduced: " << b(rec.reduced) << '\n'
                  << "prime: " << b(rec.prime) << '\n'
                  << "alternating: " << b(rec.alternating) << '\n'
                  << "almost_alternating: " << b(rec.almost_alternating)
                  << '\n';
        if (rec.dealternators.size() == 1)
            std::cout << "dealternator=" << rec.dealternators[0] << '\n';
        else if (rec.dealternators.empty())
            std::cout << "dealternator=none" << '\n';
        else
            std::cout << "dealternator=multiple" << '\n';
        std::cout << "strongly_reduced: " << b(rec.strongly_reduced) << '\n';
    }
    return 0;
}

int run_decide(const std::string& path, const std::string& cert_path) {
    std::ostringstream certs;
    bool any_nontrivial = false;
    for (const std::string& line : read_pd_lines(path)) {
        aak::Diagram d = aak::parse_pd(line);
        aak::Verdict v = aak::decide(d);
        std::cout << aak::status_line(v) << '\n';
        if (v.status == aak::Status::NONTRIVIAL) any_nontrivial = true;
        if (!cert_path.empty()) certs << aak::write_certificate(d, v);
    }
    if (!cert_path.empty()) {
        std::ofstream file;
        open_out(cert_path, file) << certs.str();
    }
    return any_nontrivial ? 3 : 0;
}

int run_generate(int max_crossings, const std::string& m_list, bool u1,
                 const std::string& out_path) {
    aak::EnumConfig cfg;
    cfg.max_crossings = max_crossings;
    cfg.m_values.clear();
    {
        std::istringstream is(m_list);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.empty()) continue;
            try {
                cfg.m_values.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw aak::input_error("bad --m entry: " + tok);
            }
        }
    }
    if (cfg.m_values.empty()) throw aak::input_error("--m list is empty");
    std::vector<aak::Diagram> out = aak::enumerate_unknot_diagrams(cfg);
    if (u1) {
        std::map<aak::CanonicalCode, aak::Diagram> dedup;
        for (const aak::Diagram& d : out)
            dedup.emplace(aak::canonical_code(aak::u1_alternating(d)),
                          aak::u1_alternating(d));
        out.clear();
        for (auto& [k, v] : dedup) out.push_back(std::move(v));
        std::stable_sort(out.begin(), out.end(),
                         [](const aak::Diagram& a, const aak::Diagram& b) {
                             if (a.n != b.n) return a.n < b.n;
                             return aak::canonical_code(a) <
                                    aak::canonical_code(b);
                         });
    }
    std::ofstream file;
    std::ostream& os = open_out(out_path, file);
    os << "# generate max-crossings=" << max_crossings << " m=" << m_list
       << " u1-alternating=" << (u1 ? "true" : "false") << '\n';
    for (const aak::Diagram& d : out) os << aak::emit_pd(d) << '\n';
    return 0;
}

int run_invariant(const std::string& path, bool want_bracket, bool want_jones,
                  bool want_det) {
    if (want_bracket + want_jones + want_det != 1)
        throw aak::input_error(
            "exactly one of --bracket, --jones, --det is required");
    for (const std::string& line : read_pd_lines(path)) {
        aak::Diagram d = aak::parse_pd(line);
        if (want_bracket)
            std::cout << aak::poly_to_string(aak::bracket(d)) << '\n';
        else if (want_jones)
            std::cout << aak::poly_to_string(aak::jones(d)) << '\n';
        else
            std::cout << aak::determinant(d) << '\n';
    }
    return 0;
}

int run_canon(const std::string& path) {
    for (const std::string& line : read_pd_lines(path)) {
        aak::Diagram d = aak::parse_pd(line);
        std::cout << aak::canonical_code_string(d) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Almost-alternating knot diagram toolkit: validation, unknot "
        "decision with certificates, unknot-diagram generation, and exact "
        "bracket/Jones invariants over PD text"};
    app.require_subcommand(1);

    std::string v_file = "-";
    CLI::App* v = app.add_subcommand(
        "validate", "Print diagram predicates, one block per input line");
    v->add_option("FILE", v_file, "PD file ('-' = stdin)");

    std::string d_file = "-";
    std::string d_cert;
    CLI::App* dc = app.add_subcommand(
        "decide", "Decide unknottedness of reduced almost alternating knots");
    dc->add_option("FILE", d_file, "PD file ('-' = stdin)");
    dc->add_option("--certificate", d_cert, "write reduction certificates here");

    int g_max = 0;
    std::string g_m = "1,-1,2,-2,3,-3";
    bool g_u1 = false;
    std::string g_out;
    CLI::App* g = app.add_subcommand(
        "generate", "Enumerate reduced almost alternating unknot diagrams");
    g->add_option("--max-crossings", g_max, "crossing budget")->required();
    g->add_option("--m", g_m, "comma-separated base family parameters");
    g->add_flag("--u1-alternating", g_u1,
                "emit the flipped-dealternator alternating diagrams instead");
    g->add_option("--out", g_out, "output file (default stdout)");

    std::string i_file = "-";
    bool i_bracket = false, i_jones = false, i_det = false;
    CLI::App* iv = app.add_subcommand(
        "invariant", "Exact bracket / Jones polynomial / determinant");
    iv->add_option("FILE", i_file, "PD file ('-' = stdin)");
    iv->add_flag("--bracket", i_bracket, "Kauffman bracket polynomial");
    iv->add_flag("--jones", i_jones, "Jones polynomial (in A)");
    iv->add_flag("--det", i_det, "knot determinant");

    std::string c_file = "-";
    CLI::App* cn = app.add_subcommand(
        "canon", "Print the canonical code of each diagram");
    cn->add_option("FILE", c_file, "PD file ('-' = stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (v->parsed()) return run_validate(v_file);
        if (dc->parsed()) return run_decide(d_file, d_cert);
        if (g->parsed()) return run_generate(g_max, g_m, g_u1, g_out);
        if (iv->parsed()) return run_invariant(i_file, i_bracket, i_jones, i_det);
        if (cn->parsed()) return run_canon(c_file);
    } catch (const aak::input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const aak::internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
