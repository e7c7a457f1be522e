#include "symquot/report.hpp"

#include <json.hpp>

#include <sstream>

namespace symquot {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kVersion = "0.1.0";

std::string opt_bool(const std::optional<bool>& b) {
    if (!b) return "skipped";
    return *b ? "true" : "false";
}

ordered_json json_opt_bool(const std::optional<bool>& b) {
    if (!b) return "skipped";
    return *b;
}

ordered_json row_json(const QuotientReport& r) {
    ordered_json j;
    j["index"] = r.chi_index;
    j["degree"] = r.degree;
    j["lambda_exponent"] = r.lambda_exponent;
    j["symmetric"] = r.symmetric;
    j["rank_K"] = r.rank_K;
    j["rank_k"] = r.rank_k;
    j["matrix_algebra"] = json_opt_bool(r.matrix_algebra);
    j["central_type"] = r.central_type;
    j["height"] = r.height;
    j["block"] = r.block;
    if (r.trace_exponent) {
        j["trace_exponent"] = *r.trace_exponent;
    } else {
        j["trace_exponent"] = "skipped";
    }
    j["gram_unimodular"] = json_opt_bool(r.gram_unimodular);
    j["divisible"] = r.divisible;
    j["nakayama"] = r.nakayama;
    ordered_json piv = ordered_json::array();
    for (const auto& [col, val] : r.lattice_pivots) {
        piv.push_back({{"column", col}, {"valuation", val}});
    }
    j["lattice_pivots"] = piv;
    j["verdict"] = to_string(r.verdict);
    return j;
}

ordered_json header_json(const GroupClassification& C) {
    ordered_json j;
    j["tool"] = "symquot";
    j["version"] = kVersion;
    j["group"] = {{"spec", C.spec},
                  {"order", C.order},
                  {"exponent", C.exponent},
                  {"classes", C.classes}};
    j["context"] = {{"m", C.conductor},
                    {"p", C.p},
                    {"e", C.ramification},
                    {"f", C.residue_degree}};
    j["semisimple"] = C.semisimple;
    return j;
}

}  // namespace

ReportFormat parse_format(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "tsv") return ReportFormat::Tsv;
    if (s == "text") return ReportFormat::Text;
    throw arith_error("unknown format: " + s);
}

std::string render_classification(const GroupClassification& C, ReportFormat fmt,
                                  long timing_ms) {
    if (fmt == ReportFormat::Json) {
        ordered_json j = header_json(C);
        j["command"] = "classify";
        ordered_json rows = ordered_json::array();
        for (const auto& r : C.rows) rows.push_back(row_json(r));
        j["characters"] = rows;
        j["violations"] = C.violations;
        j["skipped"] = C.skipped;
        if (timing_ms >= 0) j["timing_ms"] = timing_ms;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (fmt == ReportFormat::Tsv) {
        os << "index\tdegree\tlambda\tsymmetric\trank_K\trank_k\tmatrix_algebra\tcentral_type"
              "\theight\tblock\ttrace_exponent\tgram_unimodular\tdivisible\tnakayama\tverdict\n";
        for (const auto& r : C.rows) {
            os << r.chi_index << '\t' << r.degree << '\t' << r.lambda_exponent << '\t'
               << (r.symmetric ? "true" : "false") << '\t' << r.rank_K << '\t' << r.rank_k
               << '\t' << opt_bool(r.matrix_algebra) << '\t'
               << (r.central_type ? "true" : "false") << '\t' << r.height << '\t' << r.block
               << '\t';
            if (r.trace_exponent) {
                os << *r.trace_exponent;
            } else {
                os << "skipped";
            }
            os << '\t' << opt_bool(r.gram_unimodular) << '\t'
               << (r.divisible ? "true" : "false") << '\t' << (r.nakayama ? "true" : "false")
               << '\t' << to_string(r.verdict) << '\n';
        }
        if (timing_ms >= 0) os << "# timing_ms\t" << timing_ms << '\n';
        return os.str();
    }
    os << "group " << C.spec << "  order " << C.order << "  exponent " << C.exponent
       << "  classes " << C.classes << "\n";
    os << "context m=" << C.conductor << " p=" << C.p << " e=" << C.ramification
       << " f=" << C.residue_degree;
    if (C.semisimple) os << "  (p prime to |G|: every quotient is a matrix algebra)";
    os << "\n\n";
    os << "  chi  deg  lambda  symmetric  matrix  ctype  ht  blk  r  gram  div  nakayama  "
          "verdict\n";
    for (const auto& r : C.rows) {
        os << "  " << r.chi_index << "    " << r.degree << "    " << r.lambda_exponent
           << "       " << (r.symmetric ? "yes" : "no ") << "      " << opt_bool(r.matrix_algebra)
           << "   " << (r.central_type ? "yes" : "no ") << "   " << r.height << "   " << r.block
           << "   ";
        if (r.trace_exponent) {
            os << *r.trace_exponent;
        } else {
            os << "-";
        }
        os << "  " << opt_bool(r.gram_unimodular) << "  " << (r.divisible ? "yes" : "no ")
           << "   " << (r.nakayama ? "yes" : "no ") << "       " << to_string(r.verdict) << "\n";
    }
    os << "\nviolations " << C.violations << "  skipped " << C.skipped << "\n";
    if (timing_ms >= 0) os << "timing_ms " << timing_ms << "\n";
    return os.str();
}

std::string render_corpus(const CorpusReport& R, ReportFormat fmt, long timing_ms) {
    if (fmt == ReportFormat::Json) {
        ordered_json j;
        j["tool"] = "symquot";
        j["version"] = kVersion;
        j["command"] = "corpus";
        ordered_json entries = ordered_json::array();
        for (const auto& e : R.entries) {
            entries.push_back({{"spec", e.spec},
                               {"p", e.p},
                               {"order", e.order},
                               {"rows", e.rows},
                               {"symmetric", e.symmetric},
                               {"violations", e.violations},
                               {"skipped", e.skipped},
                               {"consistency_ok", e.consistency_ok}});
        }
        j["entries"] = entries;
        j["total_violations"] = R.total_violations;
        j["total_skipped"] = R.total_skipped;
        j["consistency_ok"] = R.consistency_ok;
        if (timing_ms >= 0) j["timing_ms"] = timing_ms;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (fmt == ReportFormat::Tsv) {
        os << "spec\tp\torder\trows\tsymmetric\tviolations\tskipped\tconsistency\n";
        for (const auto& e : R.entries) {
            os << e.spec << '\t' << e.p << '\t' << e.order << '\t' << e.rows << '\t'
               << e.symmetric << '\t' << e.violations << '\t' << e.skipped << '\t'
               << (e.consistency_ok ? "ok" : "BROKEN") << '\n';
        }
        os << "# totals\tviolations=" << R.total_violations << "\tskipped=" << R.total_skipped
           << "\tconsistency=" << (R.consistency_ok ? "ok" : "BROKEN") << '\n';
        if (timing_ms >= 0) os << "# timing_ms\t" << timing_ms << '\n';
        return os.str();
    }
    for (const auto& e : R.entries) {
        os << e.spec << " p=" << e.p << "  rows=" << e.rows << " symmetric=" << e.symmetric
           << " violations=" << e.violations << " skipped=" << e.skipped
           << (e.consistency_ok ? "" : "  CONSISTENCY-BROKEN") << "\n";
    }
    os << "total: entries=" << R.entries.size() << " violations=" << R.total_violations
       << " skipped=" << R.total_skipped << " consistency="
       << (R.consistency_ok ? "ok" : "BROKEN") << "\n";
    if (timing_ms >= 0) os << "timing_ms " << timing_ms << "\n";
    return os.str();
}

std::string render_verify(const VerifyResult& V, ReportFormat fmt, long timing_ms) {
    if (fmt == ReportFormat::Json) {
        ordered_json j;
        j["tool"] = "symquot";
        j["version"] = kVersion;
        j["command"] = "verify";
        j["id"] = V.id;
        ordered_json facts = ordered_json::array();
        for (const auto& [k, v] : V.facts) facts.push_back({{"name", k}, {"value", v}});
        j["facts"] = facts;
        j["verdict"] = to_string(V.verdict);
        if (timing_ms >= 0) j["timing_ms"] = timing_ms;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (fmt == ReportFormat::Tsv) {
        for (const auto& [k, v] : V.facts) os << V.id << '\t' << k << '\t' << v << '\n';
        os << V.id << "\tverdict\t" << to_string(V.verdict) << '\n';
        if (timing_ms >= 0) os << "# timing_ms\t" << timing_ms << '\n';
        return os.str();
    }
    os << "verify " << V.id << "\n";
    for (const auto& [k, v] : V.facts) os << "  " << k << ": " << v << "\n";
    os << "verdict: " << to_string(V.verdict) << "\n";
    if (timing_ms >= 0) os << "timing_ms " << timing_ms << "\n";
    return os.str();
}

std::string render_table(const CharacterTable& T, ReportFormat fmt) {
    const Group& G = *T.group;
    const CycField& F = *T.field;
    if (fmt == ReportFormat::Json) {
        ordered_json j;
        j["tool"] = "symquot";
        j["version"] = kVersion;
        j["command"] = "table";
        j["group"] = {{"spec", G.name()},
                      {"order", G.order()},
                      {"exponent", G.exponent()},
                      {"classes", G.class_count()}};
        j["conductor"] = F.conductor();
        ordered_json classes = ordered_json::array();
        for (unsigned c = 0; c < G.class_count(); ++c) {
            classes.push_back({{"representative", G.class_rep(c) + 1},
                               {"size", G.class_size(c)},
                               {"order", G.element_order(G.class_rep(c))}});
        }
        j["classes"] = classes;
        ordered_json rows = ordered_json::array();
        for (const auto& chi : T.irr) {
            ordered_json row = ordered_json::array();
            for (const auto& v : chi.values) {
                ordered_json val;
                ordered_json num = ordered_json::array();
                for (const auto& c : v.num) num.push_back(c.str());
                val["num"] = num;
                val["den"] = v.den.str();
                row.push_back(val);
            }
            rows.push_back({{"degree", chi.degree}, {"values", row}});
        }
        j["irreducibles"] = rows;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (fmt == ReportFormat::Tsv) {
        os << "# group " << G.name() << " order " << G.order() << " conductor "
           << F.conductor() << '\n';
        os << "degree";
        for (unsigned c = 0; c < G.class_count(); ++c) {
            os << "\tC" << c << "(g" << G.class_rep(c) + 1 << ",|" << G.class_size(c) << "|)";
        }
        os << '\n';
        for (const auto& chi : T.irr) {
            os << chi.degree;
            for (const auto& v : chi.values) os << '\t' << F.to_string(v);
            os << '\n';
        }
        return os.str();
    }
    os << "character table of " << G.name() << "  (order " << G.order() << ", "
       << G.class_count() << " classes, values in Q(zeta_" << F.conductor() << "))\n";
    os << "classes:";
    for (unsigned c = 0; c < G.class_count(); ++c) {
        os << "  C" << c << "=(g" << G.class_rep(c) + 1 << ", size " << G.class_size(c)
           << ", order " << G.element_order(G.class_rep(c)) << ")";
    }
    os << "\n";
    for (unsigned i = 0; i < T.size(); ++i) {
        os << "chi" << i << " (deg " << T.irr[i].degree << "):";
        for (const auto& v : T.irr[i].values) os << "  " << F.to_string(v);
        os << "\n";
    }
    return os.str();
}

}  // namespace symquot
