#include "report.hpp"

#include "alexchen/alexinv.hpp"
#include "alexchen/braidrep.hpp"
#include "alexchen/geomingest.hpp"
#include "alexchen/localcc.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace alexchen::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string sets_str(const std::vector<Subset>& sets) {
    std::string s;
    for (std::size_t i = 0; i < sets.size(); ++i) s += (i ? " " : "") + subset_str(sets[i]);
    return s;
}

nlohmann::json sets_json(const std::vector<Subset>& sets) {
    nlohmann::json j = nlohmann::json::array();
    for (auto& V : sets) j.push_back(V);
    return j;
}

std::string integer_vector_str(const std::vector<Integer>& v, const std::vector<std::string>& labels) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        std::string c = v[i].get_str();
        if (!s.empty()) s += sgn(v[i]) > 0 ? " + " : " - ";
        else if (sgn(v[i]) < 0) s += "-";
        if (abs(v[i]) != 1) s += Integer(abs(v[i])).get_str() + "*";
        s += "[" + labels[i] + "]";
    }
    return s.empty() ? "0" : s;
}

struct LatticeAnalysis {
    Lattice2 lat;
    DecompositionVerdict verdict;
    long long theta3 = 0;
};

LatticeAnalysis analyze(const Lattice2& lat, std::ostream& out, nlohmann::json& j, const std::string& note) {
    LatticeAnalysis a{lat, decomposes(lat), 0};
    a.theta3 = static_cast<long long>(a.verdict.coker_rank) + theta_cc(lat, 3);
    out << "lattice" << (note.empty() ? "" : " (" + note + ")") << ": n = " << lat.n << ", "
        << lat.sets.size() << " vertex sets, b2 = " << lat.b2() << "\n";
    out << "  L2: " << sets_str(lat.sets) << "\n";
    out << "  multiplicities:";
    for (auto& [r, c] : lat.multiplicities()) out << " " << c << "x" << r;
    out << "\n";
    auto& v = a.verdict;
    std::size_t rows = static_cast<std::size_t>(binomial(lat.n, 3));
    out << "Psi3: Z^" << rows << " -> Z^" << v.target_dim << ", rank " << v.rank << ", coker rank " << v.coker_rank;
    if (!v.torsion.empty()) {
        out << ", torsion";
        for (auto& t : v.torsion) out << " Z/" << t.get_str();
    }
    out << "\n";
    for (std::size_t i = 0; i < v.coker_basis.size(); ++i)
        out << "  coker basis " << i + 1 << ": " << integer_vector_str(v.coker_basis[i], v.labels) << "\n";
    out << "verdict: " << (v.surjective ? "decomposable (Psi3 surjective)" : "not decomposable (Psi3 not surjective)")
        << "\n";
    out << "theta3 from lattice: " << a.theta3 << " = " << v.coker_rank << " + theta_cc_3 " << theta_cc(lat, 3) << "\n";

    j["lattice"] = {{"n", lat.n}, {"sets", sets_json(lat.sets)}, {"b2", lat.b2()}, {"note", note}};
    nlohmann::json basis = nlohmann::json::array();
    for (auto& b : v.coker_basis) {
        nlohmann::json row = nlohmann::json::array();
        for (auto& x : b) row.push_back(x.get_si());
        basis.push_back(row);
    }
    nlohmann::json torsion = nlohmann::json::array();
    for (auto& t : v.torsion) torsion.push_back(t.get_str());
    j["psi3"] = {{"source_dim", rows},        {"target_dim", v.target_dim}, {"rank", v.rank},
                 {"coker_rank", v.coker_rank}, {"torsion", torsion},        {"coker_basis", basis},
                 {"labels", v.labels}};
    j["decomposable"] = v.surjective;
    j["theta3_lattice"] = a.theta3;
    return a;
}

void theta_table(std::ostream& out, nlohmann::json& j, const ChenProfile& prof, const LatticeAnalysis* la) {
    out << "Chen ranks (" << prof.method << "):\n";
    out << "  k   theta_k" << (la ? "  theta_cc_k" : "") << "\n";
    out << "  1   " << std::setw(7) << prof.theta1 << "\n";
    nlohmann::json cc = nlohmann::json::object();
    for (auto& [k, t] : prof.theta) {
        out << "  " << std::left << std::setw(3) << k << " " << std::right << std::setw(7) << t;
        if (la) {
            long long c = theta_cc(la->lat, k);
            cc[std::to_string(k)] = c;
            out << "  " << std::setw(10) << c;
        }
        out << "\n";
    }
    if (prof.linear_tail)
        out << "  linear tail: theta_k = " << prof.linear_tail->first << "k " << (prof.linear_tail->second < 0 ? "- " : "+ ")
            << std::llabs(prof.linear_tail->second) << " for 4 <= k <= " << prof.K << "\n";
    j["chen"] = prof.to_json();
    if (la) j["theta_cc"] = cc;
}

void compare(std::ostream& out, const std::string& what, const ChenProfile& a, const ChenProfile& b, int max_k,
             bool& mismatch, nlohmann::json& j) {
    bool ok = true;
    for (auto& [k, t] : a.theta) {
        if (k > max_k) {
            out << "SKIP     " << what << " k=" << k << " (beyond oracle limit " << max_k << ")\n";
            continue;
        }
        auto it = b.theta.find(k);
        if (it == b.theta.end()) continue;
        bool eq = it->second == t;
        ok = ok && eq;
        out << (eq ? "AGREE    " : "MISMATCH ") << what << " k=" << k << " " << t << " " << it->second << "\n";
    }
    if (!ok) mismatch = true;
    j[what] = ok;
}

void check_expect(std::ostream& out, const ChenProfile& prof, const std::vector<long long>& expect, bool& mismatch,
                  nlohmann::json& j) {
    bool ok = true;
    for (std::size_t i = 0; i < expect.size(); ++i) {
        int k = static_cast<int>(i) + 2;
        auto it = prof.theta.find(k);
        if (it == prof.theta.end()) continue;
        bool eq = it->second == expect[i];
        ok = ok && eq;
        out << (eq ? "AGREE    " : "MISMATCH ") << "expected k=" << k << " " << it->second << " " << expect[i] << "\n";
    }
    if (!ok) mismatch = true;
    j["expected"] = ok;
}

}  // namespace

std::optional<Pipeline> parse_pipeline(const std::string& s) {
    if (s == "general") return Pipeline::General;
    if (s == "real") return Pipeline::Real;
    if (s == "reduced") return Pipeline::Reduced;
    return std::nullopt;
}

std::string pipeline_name(Pipeline p) {
    switch (p) {
        case Pipeline::General: return "general";
        case Pipeline::Real: return "real";
        case Pipeline::Reduced: return "reduced";
    }
    return "?";
}

JobResult run_job(const JobSpec& job) {
    if (job.K < 2) throw std::invalid_argument("-K must be at least 2");
    int D = job.truncate.value_or(job.K - 2);
    if (D < job.K - 2) throw std::invalid_argument("--truncate must be at least K - 2 = " + std::to_string(job.K - 2));
    JobResult res;
    std::ostringstream out;
    nlohmann::json& j = res.json;
    j["input"] = {{"path", job.path}, {"K", job.K}, {"truncation", D}};
    std::string text = read_file(job.path);

    std::optional<LatticeAnalysis> la;
    std::optional<Presentation> pres, other;
    std::optional<std::vector<ConjugatedTwist>> mono;
    Pipeline used = Pipeline::General;
    int nvars = 0;

    auto build = [&](Pipeline pl, const std::vector<ConjugatedTwist>& m, const std::vector<RealVertex>* rv, int n) {
        switch (pl) {
            case Pipeline::General: return presentation_general(m, n);
            case Pipeline::Real:
                if (!rv) throw std::invalid_argument("--pipeline real needs a real arrangement as input");
                return presentation_real(*rv, n);
            case Pipeline::Reduced: return presentation_completed_reduced(m, n, D);
        }
        throw std::logic_error("pipeline");
    };

    switch (job.kind) {
        case InputKind::Arrangement: {
            ArrangementFile f = ArrangementFile::parse(text);
            if (job.central && !f.central) throw std::invalid_argument("--central given but the file lists affine lines");
            AffineLineArrangement aff;
            if (f.central) {
                int which = job.decone.value_or(f.planes.n());
                out << "input: central arrangement, " << f.planes.n() << " planes, deconed at plane " << which << "\n";
                out << f.planes.str();
                j["input"]["kind"] = "central arrangement";
                j["input"]["decone"] = which;
                la = analyze(lattice2(f.planes), out, j, "");
                aff = decone(f.planes, which);
            } else {
                if (job.decone) throw std::invalid_argument("--decone needs a central arrangement");
                aff = f.affine;
                out << "input: affine arrangement, " << aff.n() << " lines\n" << aff.str();
                j["input"]["kind"] = "affine arrangement";
                auto sets = affine_vertex_sets(aff);
                bool transverse = Lattice2::make(aff.n(), sets, true).sets.size() == sets.size();
                la = transverse ? analyze(lattice2(aff), out, j, "")
                                : analyze(cone_lattice(aff.n(), sets), out, j, "cone, plane " +
                                                                               std::to_string(aff.n() + 1) + " at infinity");
            }
            nvars = aff.n();
            FrameCertificate cert = f.frame ? certify_frame(aff, *f.frame) : generic_frame(aff);
            out << "frame: " << cert.frame.str() << (f.frame ? " (from file)" : " (shear search)") << ", "
                << cert.projections.size() << " distinct vertex projections\n";
            WiringDiagram w = wiring_diagram(aff, cert);
            out << "wiring diagram:\n" << w.str();
            mono = monodromy_real(w);
            auto rv = real_vertices(w);
            out << (w.identity_labels() ? "monodromy:" : "monodromy (wire labels):");
            for (auto& g : *mono) out << " " << g.str();
            out << "\n";
            nlohmann::json wj = nlohmann::json::array(), mj = nlohmann::json::array();
            for (auto& e : w.events) wj.push_back({{"V", e.V}, {"U", e.U}, {"J", e.J}});
            for (auto& g : *mono) mj.push_back(g.str());
            j["frame"] = cert.frame.str();
            j["wiring"] = wj;
            j["wire_to_line"] = w.wire_to_line;
            j["monodromy"] = mj;
            used = job.pipeline.value_or(Pipeline::Real);
            pres = build(used, *mono, &rv, nvars);
            if (job.verify) {
                Pipeline alt = used == Pipeline::Real ? Pipeline::General : Pipeline::Real;
                other = build(alt, *mono, &rv, nvars);
            }
            break;
        }
        case InputKind::Monodromy: {
            MonodromyFile m = MonodromyFile::parse(text);
            nvars = m.n;
            mono = m.generators;
            out << "input: braid monodromy, " << m.n << " strands, " << m.generators.size() << " generators\n";
            out << "monodromy:";
            for (auto& g : m.generators) out << " " << g.str();
            out << "\n";
            j["input"]["kind"] = "monodromy";
            std::vector<Subset> sets;
            for (auto& g : m.generators) sets.push_back(g.V);
            try {
                Lattice2 lat = Lattice2::make(m.n, sets, true).sets.size() == sets.size()
                                   ? Lattice2::make(m.n, sets)
                                   : cone_lattice(m.n, sets);
                la = analyze(lat, out, j, lat.n > m.n ? "cone, plane " + std::to_string(lat.n) + " at infinity" : "");
            } catch (const std::invalid_argument& e) {
                out << "lattice: unavailable (" << e.what() << ")\n";
            }
            used = job.pipeline.value_or(Pipeline::General);
            pres = build(used, *mono, nullptr, nvars);
            if (job.verify && used != Pipeline::General) other = build(Pipeline::General, *mono, nullptr, nvars);
            break;
        }
        case InputKind::Lattice: {
            Lattice2 lat = Lattice2::parse(text);
            out << "input: lattice, " << lat.n << " hyperplanes\n";
            j["input"]["kind"] = "lattice";
            la = analyze(lat, out, j, "");
            ChenProfile prof;
            prof.theta1 = lat.n;
            prof.K = job.K;
            prof.theta[2] = theta_cc(lat, 2);
            if (job.K >= 3) prof.theta[3] = la->theta3;
            if (la->verdict.surjective) {
                for (int k = 4; k <= job.K; ++k) prof.theta[k] = theta_cc(lat, k);
                prof.method = "lattice (decomposable: theta_k = theta_cc_k)";
                detect_linear_tail(prof);
            } else {
                prof.K = std::min(job.K, 3);
                prof.method = "lattice (theta_k for k >= 4 needs a monodromy)";
            }
            theta_table(out, j, prof, &*la);
            res.profile = prof;
            if (!job.expect.empty()) {
                out << "verify:\n";
                check_expect(out, prof, job.expect, res.mismatch, j["verify"]);
            }
            res.text = out.str();
            return res;
        }
        case InputKind::Presentation: {
            pres = Presentation::from_text(text);
            nvars = pres->nvars;
            out << "input: presentation over " << (pres->ring == RingTag::Laurent ? "Laurent polynomials" : "power series")
                << " in " << nvars << " variables\n";
            j["input"]["kind"] = "presentation";
            break;
        }
    }

    out << "presentation";
    if (job.kind != InputKind::Presentation) out << " (" << pipeline_name(used) << ")";
    out << ": " << pres->generators() << " generators, " << pres->relations() << " relations\n";
    j["presentation"] = {{"generators", pres->generators()}, {"relations", pres->relations()}};
    if (job.kind != InputKind::Presentation) j["presentation"]["pipeline"] = pipeline_name(used);
    if (job.write_presentation) {
        std::ofstream po(*job.write_presentation);
        if (!po) throw std::runtime_error("cannot write " + *job.write_presentation);
        po << pres->to_text();
    }

    ChenProfile prof = chen_ranks(*pres, job.K, D);
    theta_table(out, j, prof, la ? &*la : nullptr);
    res.profile = prof;

    nlohmann::json checks = nlohmann::json::object();
    if (la) {
        long long n = la->lat.n;
        bool t2 = prof.theta.at(2) == n * (n - 1) / 2 - la->lat.b2();
        out << "check theta_2 = C(n,2) - b2: " << (t2 ? "ok" : "FAILED") << "\n";
        checks["theta2_b2"] = t2;
        if (prof.theta.count(3)) {
            bool t3 = prof.theta.at(3) == la->theta3;
            out << "check theta_3 against lattice: " << (t3 ? "ok" : "FAILED") << "\n";
            checks["theta3_lattice"] = t3;
        }
        bool ge = true;
        for (auto& [k, t] : prof.theta) ge = ge && t >= theta_cc(la->lat, k);
        out << "check theta_k >= theta_cc_k: " << (ge ? "ok" : "FAILED") << "\n";
        checks["theta_ge_cc"] = ge;
    }
    j["checks"] = checks;

    nlohmann::json vj = nlohmann::json::object();
    if (job.verify) {
        out << "verify:\n";
        int ok_k = std::min(job.K, job.oracle_max_k);
        ChenProfile o = chen_ranks_oracle(*pres, ok_k);
        compare(out, "oracle", prof, o, ok_k, res.mismatch, vj);
        if (other) {
            ChenProfile op = chen_ranks(*other, job.K, D);
            compare(out, "pipelines", prof, op, job.K, res.mismatch, vj);
        }
        if (!job.expect.empty()) check_expect(out, prof, job.expect, res.mismatch, vj);
        out << (res.mismatch ? "verify: MISMATCH\n" : "verify: all agree\n");
        j["oracle"] = {{"run", true}, {"max_k", ok_k}, {"agree", vj.value("oracle", false)}};
    } else {
        if (!job.expect.empty()) {
            out << "verify:\n";
            check_expect(out, prof, job.expect, res.mismatch, vj);
        }
        out << "oracle: not run (use --verify)\n";
        j["oracle"] = {{"run", false}};
    }
    j["verify"] = vj;
    res.text = out.str();
    return res;
}

std::string side_by_side(const std::vector<std::string>& names, const std::vector<JobResult>& results) {
    std::ostringstream out;
    out << "side by side:\n  k ";
    for (auto& n : names) out << "  " << std::setw(std::max<int>(8, static_cast<int>(n.size()))) << n;
    out << "\n";
    int K = 0;
    for (auto& r : results)
        if (r.profile && !r.profile->theta.empty()) K = std::max(K, r.profile->theta.rbegin()->first);
    for (int k = 2; k <= K; ++k) {
        out << "  " << std::left << std::setw(2) << k << std::right;
        for (std::size_t i = 0; i < results.size(); ++i) {
            int w = std::max<int>(8, static_cast<int>(names[i].size()));
            auto& p = results[i].profile;
            if (p && p->theta.count(k))
                out << "  " << std::setw(w) << p->theta.at(k);
            else
                out << "  " << std::setw(w) << "-";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace alexchen::cli
