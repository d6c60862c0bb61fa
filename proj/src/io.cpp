#include "simpd/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "simpd/oracle.hpp"

namespace simpd {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

int parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line) + ": expected an integer, got '" +
                        tok + "'");
    }
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
              c == '-'))
            return false;
    return true;
}

[[noreturn]] void parse_fail(int line, const std::string& why) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + why);
}

} // namespace

Job parse_job(const std::string& text) {
    Job job;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    ComplexDef* open_complex = nullptr;
    MapDef* open_map = nullptr;
    while (std::getline(in, raw)) {
        ++lineno;
        std::vector<std::string> tok = tokenize(strip_comment(raw));
        if (tok.empty()) continue;
        const std::string& head = tok[0];
        if (head == "complex") {
            if (tok.size() != 2 || !valid_name(tok[1]))
                parse_fail(lineno, "expected 'complex <name>'");
            job.items.push_back(ComplexDef{tok[1], {}, lineno});
            open_complex = &std::get<ComplexDef>(job.items.back());
            open_map = nullptr;
        } else if (head == "simplex") {
            if (!open_complex) parse_fail(lineno, "'simplex' outside a complex block");
            if (tok.size() < 2) parse_fail(lineno, "empty simplex");
            Simplex s;
            for (std::size_t i = 1; i < tok.size(); ++i)
                s.push_back(parse_int(tok[i], lineno));
            open_complex->simplices.push_back(std::move(s));
        } else if (head == "map") {
            // map NAME : DOM -> COD
            if (tok.size() != 6 || tok[2] != ":" || tok[4] != "->" ||
                !valid_name(tok[1]) || !valid_name(tok[3]) || !valid_name(tok[5]))
                parse_fail(lineno, "expected 'map <name> : <domain> -> <codomain>'");
            job.items.push_back(MapDef{tok[1], tok[3], tok[5], {}, lineno});
            open_map = &std::get<MapDef>(job.items.back());
            open_complex = nullptr;
        } else if (head == "query") {
            if (tok.size() < 2) parse_fail(lineno, "empty query");
            Query q;
            q.command = tok[1];
            q.args.assign(tok.begin() + 2, tok.end());
            std::ostringstream echo;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                if (i > 1) echo << ' ';
                echo << tok[i];
            }
            q.echo = echo.str();
            q.line = lineno;
            job.items.push_back(std::move(q));
            open_complex = nullptr;
            open_map = nullptr;
        } else if (tok.size() == 3 && tok[1] == "->") {
            if (!open_map) parse_fail(lineno, "assignment outside a map block");
            open_map->assignment.emplace_back(parse_int(tok[0], lineno),
                                              parse_int(tok[2], lineno));
        } else {
            parse_fail(lineno, "unrecognized line '" + tok[0] + " ...'");
        }
    }
    return job;
}

// --- serialization ----------------------------------------------------------

std::string complex_to_text(const std::string& name, const OrderedComplex& k) {
    std::ostringstream out;
    out << "complex " << name << '\n';
    for (const Simplex& s : k.maximal_simplices()) {
        out << "simplex";
        for (Vertex v : s) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

std::string map_to_text(const std::string& name, const std::string& domain_name,
                        const std::string& codomain_name, const SimplicialMap& f) {
    std::ostringstream out;
    out << "map " << name << " : " << domain_name << " -> " << codomain_name << '\n';
    for (int d = 0; d < f.domain().vertex_count(); ++d)
        out << f.domain().vertex_at(d) << " -> " << f.images()[d] << '\n';
    return out.str();
}

namespace {

const char* rule_token(ApproximationRule rule) {
    return rule == ApproximationRule::LastVertex ? "last-vertex" : "first-vertex";
}

void write_assignment(std::ostringstream& out, const SimplicialMap& f) {
    for (int d = 0; d < f.domain().vertex_count(); ++d)
        out << f.domain().vertex_at(d) << " -> " << f.images()[d] << '\n';
}

} // namespace

std::string certificate_to_text(const Certificate& cert) {
    std::ostringstream out;
    out << "certificate simpdist\n";
    out << "rule " << rule_token(cert.query.rule) << '\n';
    out << "b " << cert.query.b << '\n';
    out << "c " << cert.query.c << '\n';
    out << "value " << cert.value.to_string() << '\n';
    out << complex_to_text("K", cert.query.phi.domain());
    out << complex_to_text("L", cert.query.phi.codomain());
    out << "map phi : K -> L\n";
    write_assignment(out, cert.query.phi);
    out << "map psi : K -> L\n";
    write_assignment(out, cert.query.psi);
    if (cert.value.is_finite() && cert.cover) {
        out << "pieces " << cert.cover->pieces.size() << '\n';
        for (std::size_t i = 0; i < cert.cover->pieces.size(); ++i) {
            out << "piece " << i << '\n';
            for (const Simplex& s : cert.cover->pieces[i].maximal_simplices()) {
                out << "simplex";
                for (Vertex v : s) out << ' ' << v;
                out << '\n';
            }
            const ContiguityChain& chain = cert.cover->chains[i];
            out << "chain " << i << " steps " << chain.steps.size() << '\n';
            for (const SimplicialMap& step : chain.steps) {
                out << "step\n";
                write_assignment(out, step);
            }
        }
    } else if (cert.value.is_infinite() && cert.witness) {
        out << "witness\n";
        out << "simplex";
        for (Vertex v : *cert.witness) out << ' ' << v;
        out << '\n';
    }
    out << "end\n";
    return out.str();
}

namespace {

// Cursor over the lines of a certificate file.
struct LineCursor {
    std::vector<std::pair<int, std::vector<std::string>>> lines;
    std::size_t pos = 0;

    explicit LineCursor(const std::string& text) {
        std::istringstream in(text);
        std::string raw;
        int lineno = 0;
        while (std::getline(in, raw)) {
            ++lineno;
            auto tok = tokenize(strip_comment(raw));
            if (!tok.empty()) lines.emplace_back(lineno, std::move(tok));
        }
    }

    bool done() const { return pos == lines.size(); }
    int lineno() const { return done() ? -1 : lines[pos].first; }
    const std::vector<std::string>& peek() const {
        if (done()) throw Error(ErrorCode::ParseError, "unexpected end of certificate");
        return lines[pos].second;
    }
    std::vector<std::string> next() {
        auto t = peek();
        ++pos;
        return t;
    }
    std::vector<std::string> expect(const std::string& head, std::size_t min_tokens) {
        auto t = next();
        if (t[0] != head || t.size() < min_tokens)
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(lines[pos - 1].first) + ": expected '" +
                            head + "'");
        return t;
    }
};

Simplex parse_simplex_line(const std::vector<std::string>& tok, int line) {
    if (tok[0] != "simplex" || tok.size() < 2) parse_fail(line, "expected 'simplex ...'");
    Simplex s;
    for (std::size_t i = 1; i < tok.size(); ++i) s.push_back(parse_int(tok[i], line));
    return s;
}

OrderedComplex parse_complex_block(LineCursor& cur, std::string* name) {
    auto head = cur.expect("complex", 2);
    *name = head[1];
    std::vector<Simplex> simplices;
    while (!cur.done() && cur.peek()[0] == "simplex")
        simplices.push_back(parse_simplex_line(cur.next(), cur.lineno()));
    return OrderedComplex::create(std::move(simplices));
}

std::vector<std::pair<Vertex, Vertex>> parse_assignment_lines(LineCursor& cur) {
    std::vector<std::pair<Vertex, Vertex>> out;
    while (!cur.done()) {
        const auto& t = cur.peek();
        if (t.size() == 3 && t[1] == "->") {
            out.emplace_back(parse_int(t[0], cur.lineno()), parse_int(t[2], cur.lineno()));
            cur.next();
        } else {
            break;
        }
    }
    return out;
}

DistanceValue parse_value_token(const std::string& tok, int line) {
    if (tok == "inf") return DistanceValue::infinite();
    if (tok.rfind("Finite(", 0) == 0 && tok.back() == ')')
        return DistanceValue::finite(
            parse_int(tok.substr(7, tok.size() - 8), line));
    parse_fail(line, "unrecognized value '" + tok + "'");
}

// Dense images over `domain` from explicit assignment pairs. Image ids are
// taken as-is; validity against the codomain is verify's job.
std::vector<Vertex> dense_images(const OrderedComplex& domain,
                                 const std::vector<std::pair<Vertex, Vertex>>& assignment,
                                 int line) {
    std::vector<Vertex> images(domain.vertex_count(), -1);
    for (auto [v, w] : assignment) {
        int d = domain.dense_index(v);
        if (d < 0)
            parse_fail(line, "assignment of " + std::to_string(v) +
                                 ", which is not a vertex of the block's domain");
        images[d] = w;
    }
    for (int d = 0; d < domain.vertex_count(); ++d)
        if (images[d] == -1)
            parse_fail(line, "vertex " + std::to_string(domain.vertex_at(d)) +
                                 " has no image");
    return images;
}

} // namespace

Certificate parse_certificate(const std::string& text) {
    LineCursor cur(text);
    Certificate cert;
    cur.expect("certificate", 2);
    auto rule = cur.expect("rule", 2);
    if (rule[1] == "last-vertex")
        cert.query.rule = ApproximationRule::LastVertex;
    else if (rule[1] == "first-vertex")
        cert.query.rule = ApproximationRule::FirstVertex;
    else
        parse_fail(cur.lineno(), "unknown rule '" + rule[1] + "'");
    cert.query.b = parse_int(cur.expect("b", 2)[1], cur.lineno());
    cert.query.c = parse_int(cur.expect("c", 2)[1], cur.lineno());
    cert.value = parse_value_token(cur.expect("value", 2)[1], cur.lineno());

    std::string kname, lname;
    OrderedComplex k = parse_complex_block(cur, &kname);
    OrderedComplex l = parse_complex_block(cur, &lname);

    auto parse_map_block = [&](const OrderedComplex& dom, const OrderedComplex& cod) {
        cur.expect("map", 6);
        auto assignment = parse_assignment_lines(cur);
        std::vector<std::pair<Vertex, Vertex>> pairs(assignment.begin(), assignment.end());
        return check_simplicial(dom, cod, pairs);
    };
    cert.query.phi = parse_map_block(k, l);
    cert.query.psi = parse_map_block(k, l);

    if (cert.value.is_finite()) {
        int count = parse_int(cur.expect("pieces", 2)[1], cur.lineno());
        CoverCertificate cover;
        cover.k = count - 1;
        for (int i = 0; i < count; ++i) {
            cur.expect("piece", 2);
            std::vector<Simplex> simplices;
            while (!cur.done() && cur.peek()[0] == "simplex")
                simplices.push_back(parse_simplex_line(cur.next(), cur.lineno()));
            if (simplices.empty()) parse_fail(cur.lineno(), "piece without simplices");
            // keep only inclusion-maximal entries; membership in the
            // subdivision is checked by verify_certificate
            std::sort(simplices.begin(), simplices.end(),
                      [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
            std::vector<Simplex> kept;
            for (Simplex& s : simplices) {
                s = canonical_simplex(std::move(s));
                bool dominated = false;
                for (const Simplex& m : kept)
                    if (is_subset(s, m)) { dominated = true; break; }
                if (!dominated) kept.push_back(s);
            }
            OrderedComplex piece = OrderedComplex::create(std::move(kept));
            auto chain_head = cur.expect("chain", 4);
            int steps = parse_int(chain_head[3], cur.lineno());
            if (steps < 1) parse_fail(cur.lineno(), "chain needs at least one step");
            ContiguityChain chain;
            for (int s = 0; s < steps; ++s) {
                cur.expect("step", 1);
                auto assignment = parse_assignment_lines(cur);
                chain.steps.push_back(SimplicialMap::unchecked(
                    piece, l, dense_images(piece, assignment, cur.lineno())));
            }
            cover.pieces.push_back(std::move(piece));
            cover.chains.push_back(std::move(chain));
        }
        cert.cover = std::move(cover);
    } else if (cert.value.is_infinite()) {
        cur.expect("witness", 1);
        cert.witness = canonical_simplex(parse_simplex_line(cur.next(), cur.lineno()));
    }
    cur.expect("end", 1);
    return cert;
}

// --- execution ---------------------------------------------------------------

namespace {

struct ComplexEntry {
    OrderedComplex complex;
    std::optional<ProductComplex> product;
};

struct MapEntry {
    std::optional<MapDef> def;          // user-defined, validated on demand
    std::optional<SimplicialMap> map;   // cache or auto-registered map
};

struct Runner {
    const RunConfig& config;
    std::ostringstream out;
    std::map<std::string, ComplexEntry> complexes;
    std::map<std::string, MapEntry> maps;
    int query_index = 0;
    bool any_error = false;
    bool any_undecided = false;

    explicit Runner(const RunConfig& cfg) : config(cfg) {}

    void require_fresh(const std::string& name, int line) {
        if (complexes.count(name) || maps.count(name))
            throw Error(ErrorCode::DuplicateName,
                        "line " + std::to_string(line) + ": name '" + name +
                            "' is already defined");
    }

    const ComplexEntry& complex_entry(const std::string& name, int line) {
        auto it = complexes.find(name);
        if (it == complexes.end())
            throw Error(ErrorCode::UndefinedName,
                        "line " + std::to_string(line) + ": complex '" + name +
                            "' is not defined");
        return it->second;
    }

    const SimplicialMap& map_entry(const std::string& name, int line) {
        auto it = maps.find(name);
        if (it == maps.end())
            throw Error(ErrorCode::UndefinedName,
                        "line " + std::to_string(line) + ": map '" + name +
                            "' is not defined");
        MapEntry& entry = it->second;
        if (!entry.map) {
            const MapDef& def = *entry.def;
            const OrderedComplex& dom = complex_entry(def.domain, line).complex;
            const OrderedComplex& cod = complex_entry(def.codomain, line).complex;
            entry.map = check_simplicial(dom, cod, def.assignment);
        }
        return *entry.map;
    }

    void define_complex(const ComplexDef& def) {
        require_fresh(def.name, def.line);
        // Loader canonicalization: sort/dedupe vertex lists, drop duplicate
        // and dominated simplices, each with a warning.
        std::vector<Simplex> canon;
        for (const Simplex& raw : def.simplices) {
            Simplex s = canonical_simplex(raw);
            if (s != raw)
                out << "warning: complex " << def.name << ": canonicalized "
                    << simplex_to_string(raw) << " to " << simplex_to_string(s) << '\n';
            canon.push_back(std::move(s));
        }
        std::vector<Simplex> kept;
        for (std::size_t i = 0; i < canon.size(); ++i) {
            bool drop = false;
            for (std::size_t j = 0; j < canon.size() && !drop; ++j) {
                if (i == j || !is_subset(canon[i], canon[j])) continue;
                // equal simplices: keep the first occurrence only
                drop = canon[i] != canon[j] || i > j;
            }
            if (drop)
                out << "warning: complex " << def.name << ": dropped redundant "
                    << simplex_to_string(canon[i]) << '\n';
            else
                kept.push_back(canon[i]);
        }
        ComplexEntry entry;
        try {
            entry.complex = OrderedComplex::create(std::move(kept));
        } catch (const Error& e) {
            throw Error(e.code(), "complex " + def.name + " (line " +
                                      std::to_string(def.line) + "): " + e.what());
        }
        complexes.emplace(def.name, std::move(entry));
    }

    void define_map(const MapDef& def) {
        require_fresh(def.name, def.line);
        MapEntry entry;
        entry.def = def;
        maps.emplace(def.name, std::move(entry));
    }

    // --- query helpers ----------------------------------------------------

    struct Args {
        std::vector<std::string> positional;
        std::map<std::string, std::vector<std::string>> flags;
        std::optional<std::string> as_name;
    };

    Args parse_args(const Query& q, const std::map<std::string, int>& arity) {
        Args args;
        for (std::size_t i = 0; i < q.args.size(); ++i) {
            const std::string& tok = q.args[i];
            if (tok == "as") {
                if (i + 1 >= q.args.size() || !valid_name(q.args[i + 1]))
                    parse_fail(q.line, "'as' needs a name");
                args.as_name = q.args[++i];
            } else if (tok.rfind("--", 0) == 0) {
                auto it = arity.find(tok);
                if (it == arity.end())
                    parse_fail(q.line, "unknown flag '" + tok + "' for " + q.command);
                std::vector<std::string> values;
                for (int v = 0; v < it->second; ++v) {
                    if (i + 1 >= q.args.size())
                        parse_fail(q.line, "flag '" + tok + "' needs " +
                                               std::to_string(it->second) + " value(s)");
                    values.push_back(q.args[++i]);
                }
                args.flags[tok] = std::move(values);
            } else {
                args.positional.push_back(tok);
            }
        }
        return args;
    }

    int flag_int(const Args& args, const std::string& name, int line,
                 std::optional<int> fallback = std::nullopt) {
        auto it = args.flags.find(name);
        if (it == args.flags.end()) {
            if (fallback) return *fallback;
            parse_fail(line, "missing required flag '" + name + "'");
        }
        return parse_int(it->second[0], line);
    }

    void render_value(const DistanceValue& v) {
        out << "value: " << v.to_string() << '\n';
        if (v.is_unknown()) any_undecided = true;
    }

    void render_cover(const SimpDistResult& r) {
        if (r.value.is_finite() && r.certificate) {
            out << "pieces: " << r.certificate->pieces.size() << '\n';
            for (std::size_t i = 0; i < r.certificate->pieces.size(); ++i) {
                out << "piece " << i << ':';
                for (const Simplex& s : r.certificate->pieces[i].maximal_simplices())
                    out << ' ' << simplex_to_string(s);
                out << '\n';
                out << "chain " << i << ": length "
                    << r.certificate->chains[i].length() << '\n';
            }
        } else if (r.value.is_infinite() && r.infeasible_witness) {
            out << "witness: " << simplex_to_string(*r.infeasible_witness)
                << " admits no chain at this c\n";
        }
    }

    void write_certificate_file(const SimpDistQuery& q, const SimpDistResult& r) {
        if (config.cert_out.empty() || !r.value.decided()) return;
        std::filesystem::create_directories(config.cert_out);
        std::string path =
            config.cert_out + "/query" + std::to_string(query_index) + ".cert";
        std::ofstream file(path, std::ios::binary);
        file << certificate_to_text(make_certificate(q, r));
        out << "certificate: " << path << '\n';
    }

    void oracle_check_contiguity(const SimplicialMap& f, const SimplicialMap& g,
                                 const DistanceValue& fast) {
        if (!config.with_oracle) return;
        try {
            DistanceValue ref = oracle_contiguity_distance(f, g);
            if (!fast.decided()) {
                out << "oracle: " << ref.to_string() << " (fast path undecided)\n";
            } else if (ref == fast) {
                out << "oracle: " << ref.to_string() << " (agrees)\n";
            } else {
                out << "oracle: MISMATCH fast=" << fast.to_string()
                    << " oracle=" << ref.to_string() << '\n';
                any_error = true;
            }
        } catch (const Error& e) {
            if (e.code() == ErrorCode::OracleCapExceeded)
                out << "oracle: skipped (" << e.what() << ")\n";
            else
                throw;
        }
    }

    void oracle_check_simpdist(const SimpDistQuery& q, const DistanceValue& fast) {
        if (!config.with_oracle) return;
        try {
            DistanceValue ref = oracle_simpdist(q);
            if (!fast.decided()) {
                out << "oracle: " << ref.to_string() << " (fast path undecided)\n";
            } else if (ref == fast) {
                out << "oracle: " << ref.to_string() << " (agrees)\n";
            } else {
                out << "oracle: MISMATCH fast=" << fast.to_string()
                    << " oracle=" << ref.to_string() << '\n';
                any_error = true;
            }
        } catch (const Error& e) {
            if (e.code() == ErrorCode::OracleCapExceeded)
                out << "oracle: skipped (" << e.what() << ")\n";
            else
                throw;
        }
    }

    void render_probe(const ProbeTable& table) {
        out << "probe b=0.." << table.b_max << " c=0.." << table.c_max << ":\n";
        for (int b = 0; b <= table.b_max; ++b) {
            out << "b=" << b << ':';
            for (int c = 0; c <= table.c_max; ++c) {
                out << ' ' << table.cell[b][c].to_string();
                if (table.cell[b][c].is_unknown()) any_undecided = true;
            }
            out << '\n';
        }
        for (int b = 0; b <= table.b_max; ++b) {
            if (table.rows[b].stable_at_horizon)
                out << "row b=" << b << ": stable at horizon (value "
                    << table.rows[b].value.to_string() << ")\n";
            else
                out << "row b=" << b << ": not stabilized at horizon\n";
        }
        out << "monotone in c: "
            << (table.monotone_violations.empty() ? "ok" : "VIOLATED") << '\n';
        for (const std::string& v : table.monotone_violations) {
            out << "  " << v << '\n';
            any_error = true;
        }
        out << "descent (b,c) -> (b+1,c+2): "
            << (table.descent_violations.empty() ? "ok" : "VIOLATED") << '\n';
        for (const std::string& v : table.descent_violations) {
            out << "  " << v << '\n';
            any_error = true;
        }
        out << "note: table values are horizon evidence; the limit value is "
               "defined by stabilization and is not certified by a finite "
               "probe.\n";
    }

    // --- query execution ----------------------------------------------------

    void simpdist_like(const SimpDistQuery& query) {
        SimpDistResult result;
        try {
            result = simpdist_bc(query, config.search);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::BudgetExceeded ||
                e.code() == ErrorCode::SearchBudgetExceeded) {
                render_value(DistanceValue::unknown(e.what()));
                return;
            }
            throw;
        }
        render_value(result.value);
        render_cover(result);
        oracle_check_simpdist(query, result.value);
        write_certificate_file(query, result);
    }

    void execute(const Query& q) {
        ++query_index;
        out << "=== query " << query_index << " ===\n";
        out << q.echo << '\n';
        try {
            dispatch(q);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::BudgetExceeded ||
                e.code() == ErrorCode::SearchBudgetExceeded) {
                render_value(DistanceValue::unknown(e.what()));
            } else {
                out << "error: " << e.what() << '\n';
                any_error = true;
            }
        }
    }

    void dispatch(const Query& q) {
        if (q.command == "validate") {
            Args args = parse_args(q, {});
            if (args.positional.size() != 1) parse_fail(q.line, "validate <complex>");
            const OrderedComplex& k = complex_entry(args.positional[0], q.line).complex;
            try {
                k.validate();
                out << "complex " << args.positional[0] << ": ok (" << k.vertex_count()
                    << " vertices, " << k.maximal_count() << " maximal simplices, dim "
                    << k.dim() << ")\n";
            } catch (const Error& e) {
                out << "complex " << args.positional[0] << ": " << e.what() << '\n';
            }
        } else if (q.command == "product") {
            Args args = parse_args(q, {});
            if (args.positional.size() != 2) parse_fail(q.line, "product <k> <l> [as NAME]");
            const OrderedComplex& k = complex_entry(args.positional[0], q.line).complex;
            const OrderedComplex& l = complex_entry(args.positional[1], q.line).complex;
            std::string name = args.as_name.value_or(args.positional[0] + "x" +
                                                     args.positional[1]);
            require_fresh(name, q.line);
            require_fresh(name + "_pr1", q.line);
            require_fresh(name + "_pr2", q.line);
            ProductComplex p = ordered_product(k, l);
            out << "product " << name << ": " << p.complex.vertex_count()
                << " vertices, " << p.complex.maximal_count()
                << " maximal simplices, dim " << p.complex.dim() << '\n';
            for (std::size_t i = 0; i < p.pairs.size(); ++i)
                out << "vertex " << i << " = (" << p.pairs[i].first << ","
                    << p.pairs[i].second << ")\n";
            MapEntry pr1, pr2;
            pr1.map = projection(p, 1);
            pr2.map = projection(p, 2);
            maps.emplace(name + "_pr1", std::move(pr1));
            maps.emplace(name + "_pr2", std::move(pr2));
            out << "maps: " << name << "_pr1, " << name << "_pr2\n";
            ComplexEntry entry;
            entry.complex = p.complex;
            entry.product = std::move(p);
            complexes.emplace(name, std::move(entry));
            maybe_write_complex(name);
        } else if (q.command == "subdivide") {
            Args args = parse_args(q, {{"--b", 1}});
            if (args.positional.size() != 1)
                parse_fail(q.line, "subdivide <complex> --b N [as NAME]");
            int b = flag_int(args, "--b", q.line, 1);
            const OrderedComplex& k = complex_entry(args.positional[0], q.line).complex;
            SubdividedComplex sd = subdivide_iter(k, b, config.search);
            std::string label = "Sd^" + std::to_string(b) + "(" + args.positional[0] + ")";
            out << label << ": " << sd.complex.vertex_count() << " vertices, "
                << sd.complex.maximal_count() << " maximal simplices, dim "
                << sd.complex.dim() << '\n';
            if (args.as_name) {
                require_fresh(*args.as_name, q.line);
                ComplexEntry entry;
                entry.complex = sd.complex;
                complexes.emplace(*args.as_name, std::move(entry));
                out << "registered as " << *args.as_name << '\n';
                maybe_write_complex(*args.as_name);
            }
        } else if (q.command == "check-map") {
            Args args = parse_args(q, {});
            if (args.positional.size() != 1) parse_fail(q.line, "check-map <map>");
            try {
                const SimplicialMap& f = map_entry(args.positional[0], q.line);
                out << "map " << args.positional[0] << ": simplicial ("
                    << f.domain().vertex_count() << " -> "
                    << f.codomain().vertex_count() << " vertices)\n";
            } catch (const Error& e) {
                if (e.code() == ErrorCode::NotSimplicial ||
                    e.code() == ErrorCode::UnmappedVertex)
                    out << "map " << args.positional[0] << ": " << e.what() << '\n';
                else
                    throw;
            }
        } else if (q.command == "contiguity") {
            Args args = parse_args(q, {{"--max-c", 1}});
            if (args.positional.size() != 2)
                parse_fail(q.line, "contiguity <f> <g> [--max-c N]");
            const SimplicialMap& f = map_entry(args.positional[0], q.line);
            const SimplicialMap& g = map_entry(args.positional[1], q.line);
            int max_c = flag_int(args, "--max-c", q.line, 16);
            ContiguityResult r = contiguity_distance(f, g, max_c, config.search);
            render_value(r.value);
            if (r.chain) {
                for (std::size_t i = 0; i < r.chain->steps.size(); ++i) {
                    const SimplicialMap& step = r.chain->steps[i];
                    out << "chain step " << i << ':';
                    for (int d = 0; d < step.domain().vertex_count(); ++d)
                        out << ' ' << step.domain().vertex_at(d) << "->"
                            << step.images()[d];
                    out << '\n';
                }
            }
            oracle_check_contiguity(f, g, r.value);
        } else if (q.command == "simpdist") {
            Args args = parse_args(q, {{"--b", 1}, {"--c", 1}, {"--probe", 2}});
            if (args.positional.size() != 2)
                parse_fail(q.line, "simpdist <phi> <psi> --b N --c N [--probe B C]");
            SimpDistQuery query;
            query.phi = map_entry(args.positional[0], q.line);
            query.psi = map_entry(args.positional[1], q.line);
            query.b = flag_int(args, "--b", q.line);
            query.c = flag_int(args, "--c", q.line);
            simpdist_like(query);
            if (auto it = args.flags.find("--probe"); it != args.flags.end()) {
                int bmax = parse_int(it->second[0], q.line);
                int cmax = parse_int(it->second[1], q.line);
                render_probe(stabilization_probe(query.phi, query.psi, bmax, cmax,
                                                 query.rule, config.search));
            }
        } else if (q.command == "sc") {
            Args args = parse_args(q, {{"--b", 1}, {"--c", 1}});
            if (args.positional.size() != 1) parse_fail(q.line, "sc <complex> --b N --c N");
            const OrderedComplex& k = complex_entry(args.positional[0], q.line).complex;
            SimpDistQuery query = make_sc_query(k, flag_int(args, "--b", q.line),
                                                flag_int(args, "--c", q.line));
            simpdist_like(query);
        } else if (q.command == "scat") {
            Args args = parse_args(q, {{"--base", 1}, {"--b", 1}, {"--c", 1}});
            if (args.positional.size() != 1)
                parse_fail(q.line, "scat <complex> --base V --b N --c N");
            const OrderedComplex& k = complex_entry(args.positional[0], q.line).complex;
            SimpDistQuery query =
                make_scat_query(k, flag_int(args, "--base", q.line),
                                flag_int(args, "--b", q.line), flag_int(args, "--c", q.line));
            simpdist_like(query);
        } else if (q.command == "verify-cert") {
            Args args = parse_args(q, {});
            if (args.positional.size() != 1) parse_fail(q.line, "verify-cert <file>");
            std::ifstream file(args.positional[0], std::ios::binary);
            if (!file)
                throw Error(ErrorCode::InvalidArgument,
                            "cannot open '" + args.positional[0] + "'");
            std::ostringstream text;
            text << file.rdbuf();
            try {
                Certificate cert = parse_certificate(text.str());
                VerifyOutcome v = verify_certificate(cert, config.search);
                if (v.ok) {
                    out << "certificate: OK (value " << cert.value.to_string();
                    if (cert.cover) out << ", pieces " << cert.cover->pieces.size();
                    out << ")\n";
                } else {
                    out << "certificate: REJECTED (" << v.reason << ")\n";
                }
            } catch (const Error& e) {
                out << "certificate: REJECTED (" << e.what() << ")\n";
            }
        } else {
            parse_fail(q.line, "unknown command '" + q.command + "'");
        }
    }

    void maybe_write_complex(const std::string& name) {
        if (config.cert_out.empty()) return;
        std::filesystem::create_directories(config.cert_out);
        std::string path = config.cert_out + "/query" + std::to_string(query_index) +
                           "_" + name + ".complex";
        std::ofstream file(path, std::ios::binary);
        file << complex_to_text(name, complexes.at(name).complex);
        out << "written: " << path << '\n';
    }
};

} // namespace

RunResult run_job(const Job& job, const RunConfig& config) {
    Runner runner(config);
    for (const JobItem& item : job.items) {
        if (std::holds_alternative<ComplexDef>(item))
            runner.define_complex(std::get<ComplexDef>(item));
        else if (std::holds_alternative<MapDef>(item))
            runner.define_map(std::get<MapDef>(item));
        else
            runner.execute(std::get<Query>(item));
    }
    RunResult result;
    result.report = runner.out.str();
    result.exit_code = runner.any_error ? 1 : (runner.any_undecided ? 2 : 0);
    return result;
}

RunResult run_job_text(const std::string& text, const RunConfig& config) {
    return run_job(parse_job(text), config);
}

} // namespace simpd
