#include "johnson/io.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>
#include <sstream>

#include "johnson/projection.hpp"

namespace johnson {

using json = nlohmann::ordered_json;

void write_vector_file(std::ostream& os, int n, int k, const RatVec& values) {
    if (values.size() != subset_count(n, k))
        throw std::invalid_argument("write_vector_file: dimension mismatch");
    os << "johnson-vector n=" << n << " k=" << k << " count=" << values.size() << "\n";
    for (const Rational& v : values) os << format_rational(v) << "\n";
}

VectorFile read_vector_file(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw ParseError(1, "missing header");
    VectorFile out;
    unsigned long long declared = 0;
    {
        std::istringstream hs(line);
        std::string magic, nfield, kfield, cfield;
        hs >> magic >> nfield >> kfield >> cfield;
        auto field_value = [&](const std::string& field, const std::string& key) {
            if (field.rfind(key + "=", 0) != 0)
                throw ParseError(1, "expected " + key + "=<value> in header");
            return field.substr(key.size() + 1);
        };
        if (magic != "johnson-vector")
            throw ParseError(1, "expected a johnson-vector header");
        try {
            out.n = std::stoi(field_value(nfield, "n"));
            out.k = std::stoi(field_value(kfield, "k"));
            declared = std::stoull(field_value(cfield, "count"));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError(1, "malformed header field");
        }
    }
    if (out.n < 0 || out.n > kMaxN || out.k < 0 || out.k > out.n)
        throw ParseError(1, "header (n,k) out of range");
    if (declared != subset_count(out.n, out.k))
        throw ParseError(1, "count does not equal C(n,k)");
    out.values.reserve(declared);
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() && out.values.size() == declared) continue;  // trailing newline
        try {
            out.values.push_back(parse_rational(line));
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
        if (out.values.size() > declared)
            throw ParseError(lineno, "more values than declared in header");
    }
    if (out.values.size() != declared)
        throw ParseError(lineno + 1, "expected " + std::to_string(declared) +
                                         " values, got " + std::to_string(out.values.size()));
    return out;
}

namespace {

json norm_squared_json(const EigenVector& ev) {
    const Rational norm = norm_squared(ev.label, ev.n, ev.k);
    if (norm.get_den() == 1 && norm.get_num().fits_slong_p())
        return json(norm.get_num().get_si());
    return json(format_rational(norm));
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

void write_basis_header(std::ostream& os, int n, int k, BasisFormat format) {
    if (format == BasisFormat::jsonl) return;  // jsonl is self-describing
    os << "d,B,eigenvalue,norm_squared";
    const std::uint64_t count = subset_count(n, k);
    for (std::uint64_t i = 0; i < count; ++i) os << ",e" << i;
    os << "\n";
}

void write_basis_record(std::ostream& os, const EigenVector& ev, BasisFormat format) {
    if (format == BasisFormat::jsonl) {
        json rec;
        rec["d"] = ev.degree();
        rec["B"] = format_top_set(ev.label);
        rec["eigenvalue"] = ev.eigenvalue();
        rec["norm_squared"] = norm_squared_json(ev);
        rec["entries"] = ev.entries;
        os << rec.dump() << "\n";
    } else {
        os << ev.degree() << ',' << csv_quote(format_top_set(ev.label)) << ','
           << ev.eigenvalue() << ',';
        const Rational norm = norm_squared(ev.label, ev.n, ev.k);
        os << format_rational(norm);
        for (std::int64_t e : ev.entries) os << ',' << e;
        os << "\n";
    }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line, int lineno) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw ParseError(lineno, "unterminated quote");
    fields.push_back(cur);
    return fields;
}

std::int64_t parse_int64(const std::string& s, int lineno) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError(lineno, "bad integer '" + s + "'");
    }
}

}  // namespace

std::vector<EigenVector> read_basis_file(std::istream& is, int n, int k,
                                         BasisFormat format) {
    const std::uint64_t dim = subset_count(n, k);
    std::vector<EigenVector> out;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (format == BasisFormat::csv && !header_seen) {
            header_seen = true;  // column header
            continue;
        }
        EigenVector ev;
        ev.n = n;
        ev.k = k;
        if (format == BasisFormat::jsonl) {
            json rec;
            try {
                rec = json::parse(line);
            } catch (const std::exception& e) {
                throw ParseError(lineno, e.what());
            }
            if (!rec.contains("B") || !rec.contains("entries"))
                throw ParseError(lineno, "record missing B or entries");
            try {
                ev.label = parse_top_set(rec["B"].get<std::string>(), n);
                ev.entries = rec["entries"].get<IntVec>();
            } catch (const std::exception& e) {
                throw ParseError(lineno, e.what());
            }
            if (rec.contains("d") && rec["d"].get<int>() != ev.degree())
                throw ParseError(lineno, "declared d disagrees with B");
        } else {
            const std::vector<std::string> fields = split_csv_line(line, lineno);
            if (fields.size() != 4 + dim)
                throw ParseError(lineno, "expected " + std::to_string(4 + dim) +
                                             " fields, got " + std::to_string(fields.size()));
            try {
                ev.label = parse_top_set(fields[1], n);
            } catch (const std::exception& e) {
                throw ParseError(lineno, e.what());
            }
            ev.entries.reserve(dim);
            for (std::uint64_t i = 0; i < dim; ++i)
                ev.entries.push_back(parse_int64(fields[4 + i], lineno));
        }
        if (ev.entries.size() != dim)
            throw ParseError(lineno, "entry count does not equal C(n,k)");
        out.push_back(std::move(ev));
    }
    return out;
}

std::string verify_report_text(const VerifyReport& report) {
    std::ostringstream os;
    os << "verify J(" << report.n << "," << report.k << ")\n";
    for (const VerifyCheck& c : report.checks) {
        os << (c.pass ? "  pass  " : "  FAIL  ") << c.name;
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    os << (report.all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return os.str();
}

std::string verify_report_json(const VerifyReport& report) {
    json j;
    j["n"] = report.n;
    j["k"] = report.k;
    j["all_pass"] = report.all_pass();
    j["checks"] = json::array();
    for (const VerifyCheck& c : report.checks)
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return j.dump(2);
}

}  // namespace johnson
