#include "qcmp/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace qcmp {

namespace {

// Reads the next content line, skipping blanks and '#' comments. Returns
// false at EOF. A "# label NAME" comment is reported through `label`.
bool next_line(std::istream& in, long& line_number, std::string& out, std::string* label) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_number;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') {
            if (label != nullptr) {
                std::istringstream comment(line.substr(start + 1));
                std::string word;
                if (comment >> word && word == "label" && comment >> word) *label = word;
            }
            continue;
        }
        out = line;
        return true;
    }
    return false;
}

std::vector<double> parse_reals(const std::string& line, std::size_t expected, long line_number) {
    std::istringstream ss(line);
    std::vector<double> values;
    double x = 0.0;
    while (ss >> x) values.push_back(x);
    std::string trailing;
    if (ss.clear(), ss >> trailing) {
        throw ParseError("unexpected token '" + trailing + "'", line_number);
    }
    if (values.size() != expected) {
        throw ParseError("expected " + std::to_string(expected) + " values, got " +
                         std::to_string(values.size()), line_number);
    }
    return values;
}

std::pair<int, int> parse_header(const std::string& line, long line_number) {
    std::istringstream ss(line);
    int n = 0;
    int d = 0;
    if (!(ss >> n >> d)) {
        throw ParseError("expected header 'n d'", line_number);
    }
    std::string trailing;
    if (ss >> trailing) {
        throw ParseError("unexpected token '" + trailing + "' after header", line_number);
    }
    if (n < 2 || d < 2) {
        throw ParseError("header requires n >= 2 and d >= 2", line_number);
    }
    return {n, d};
}

Vec parse_complex_row(const std::string& line, int width, long line_number) {
    const std::vector<double> reals =
        parse_reals(line, static_cast<std::size_t>(2 * width), line_number);
    Vec v(width);
    for (int k = 0; k < width; ++k) {
        v(k) = cplx(reals[static_cast<std::size_t>(2 * k)],
                    reals[static_cast<std::size_t>(2 * k + 1)]);
    }
    return v;
}

} // namespace

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

StateEnsemble read_ensemble(std::istream& in) {
    long line_number = 0;
    std::string line;
    if (!next_line(in, line_number, line, nullptr)) {
        throw ParseError("missing header line 'n d'", line_number + 1);
    }
    const auto [n, d] = parse_header(line, line_number);
    std::vector<PureState> states;
    states.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (!next_line(in, line_number, line, nullptr)) {
            throw ParseError("missing state row " + std::to_string(i + 1) + " of " +
                             std::to_string(n), line_number + 1);
        }
        states.emplace_back(parse_complex_row(line, d, line_number));
    }
    return StateEnsemble(std::move(states));
}

StateEnsemble read_ensemble_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UserError("cannot read '" + path + "'");
    return read_ensemble(in);
}

void write_ensemble(std::ostream& out, const StateEnsemble& e) {
    out << e.size() << ' ' << e.dim() << '\n';
    for (const PureState& s : e.states()) {
        for (int k = 0; k < e.dim(); ++k) {
            if (k > 0) out << ' ';
            out << fmt17(s.amplitudes()(k).real()) << ' ' << fmt17(s.amplitudes()(k).imag());
        }
        out << '\n';
    }
}

std::vector<std::pair<std::string, CompositeOperator>> read_operators(std::istream& in) {
    std::vector<std::pair<std::string, CompositeOperator>> out;
    long line_number = 0;
    std::string line;
    std::string label;
    while (next_line(in, line_number, line, &label)) {
        const auto [n, d] = parse_header(line, line_number);
        const long dim = composite_dim(n, d);
        Mat m(dim, dim);
        for (long r = 0; r < dim; ++r) {
            if (!next_line(in, line_number, line, nullptr)) {
                throw ParseError("missing operator row " + std::to_string(r + 1) + " of " +
                                 std::to_string(dim), line_number + 1);
            }
            m.row(r) = parse_complex_row(line, static_cast<int>(dim), line_number).transpose();
        }
        std::string name = label.empty() ? "E" + std::to_string(out.size()) : label;
        out.emplace_back(std::move(name), CompositeOperator(n, d, std::move(m)));
        label.clear();
    }
    if (out.empty()) throw ParseError("no operator blocks found", line_number);
    return out;
}

std::vector<std::pair<std::string, CompositeOperator>>
read_operators_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UserError("cannot read '" + path + "'");
    return read_operators(in);
}

void write_operator(std::ostream& out, const CompositeOperator& op, const std::string& label) {
    if (!label.empty()) out << "# label " << label << '\n';
    out << op.factors() << ' ' << op.local_dim() << '\n';
    const Mat& m = op.matrix();
    for (long r = 0; r < m.rows(); ++r) {
        for (long c = 0; c < m.cols(); ++c) {
            if (c > 0) out << ' ';
            out << fmt17(m(r, c).real()) << ' ' << fmt17(m(r, c).imag());
        }
        out << '\n';
    }
}

std::string certificate_csv(const SpanningCertificate& cert, std::uint64_t seed) {
    std::ostringstream out;
    out << "# seed=" << seed << '\n';
    out << "n,d,A,epsilon,sigma_min,rank,verdict,residual\n";
    out << cert.n << ',' << cert.d << ',' << fmt17(cert.threshold) << ','
        << fmt17(cert.epsilon) << ',' << fmt17(cert.sigma_min) << ',' << cert.rank << ','
        << (cert.verdict ? "true" : "false") << ',' << fmt17(cert.residual) << '\n';
    return out.str();
}

std::string decay_csv(const DecayCurve& curve) {
    std::ostringstream out;
    out << "# seed=" << curve.seed << '\n';
    out << "sample_count,nullspace_dim\n";
    for (const auto& [count, dim] : curve.samples) {
        out << count << ',' << dim << '\n';
    }
    return out.str();
}

std::string validation_csv(const PovmValidation& report) {
    std::ostringstream out;
    out << "element_label,min_eigenvalue,hermiticity_residue,completeness_residue\n";
    for (const PovmValidationRow& row : report.rows) {
        out << row.label << ',' << fmt17(row.min_eigenvalue) << ','
            << fmt17(row.hermiticity_residue) << ',' << fmt17(row.completeness_residue) << '\n';
    }
    return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open '" + tmp.string() + "' for writing");
        out << content;
        if (!out.flush()) throw Error("write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("cannot replace '" + path + "': " + ec.message());
    }
}

} // namespace qcmp
