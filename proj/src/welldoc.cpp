#include "welldoc/welldoc.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace welldoc {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Welldoc: return "WELLDOC";
        case Verdict::NotWelldoc: return "NOT_WELLDOC";
        case Verdict::NotRecurrentHenceNotWelldoc: return "NOT_RECURRENT_HENCE_NOT_WELLDOC";
    }
    return "?";
}

RecurrenceTrace is_recurrent(const Morphism& phi, Letter start) {
    if (!phi.is_prolongable(start))
        throw std::domain_error("morphism is not prolongable on letter " +
                                std::to_string(start));
    const std::size_t sigma = phi.sigma();

    // reach[a][b]: b occurs in phi^k(a) for some k >= 1. Iterating the
    // one-step relation stabilizes within sigma^2 rounds.
    std::vector<std::vector<bool>> reach(sigma, std::vector<bool>(sigma, false));
    for (Letter a = 0; a < sigma; ++a)
        for (Letter b : phi.image(a)) reach[a][b] = true;

    std::size_t steps = 1;
    for (; steps <= sigma * sigma; ++steps) {
        auto next = reach;
        for (std::size_t a = 0; a < sigma; ++a)
            for (std::size_t b = 0; b < sigma; ++b)
                if (reach[a][b])
                    for (Letter c : phi.image(static_cast<Letter>(b))) next[a][c] = true;
        if (next == reach) break;
        reach = std::move(next);
    }

    // w = start . s . phi(s) ... with phi(start) = start.s; the first
    // letter recurs iff it is reachable from some letter of the tail s.
    RecurrenceTrace trace;
    trace.steps = steps;
    trace.letter_sets = reach;
    const Word& im = phi.image(start);
    for (std::size_t i = 1; i < im.size(); ++i) {
        Letter c = im[i];
        if (c == start || reach[c][start]) {
            trace.recurrent = true;
            break;
        }
    }
    return trace;
}

WelldocVerdict decide_welldoc(const Morphism& phi) {
    if (!phi.is_prolongable(0))
        throw std::domain_error("morphism is not prolongable on 0");
    const std::size_t sigma = phi.sigma();

    WelldocVerdict out;
    out.recurrence = is_recurrent(phi, 0);

    auto inc = phi.incidence_matrix();
    IntMatrix a(sigma, IntVector(sigma));
    for (std::size_t i = 0; i < sigma; ++i)
        for (std::size_t j = 0; j < sigma; ++j) a[i][j] = inc[i][j];
    out.determinant = det(a);

    // Effective alphabet: letters reachable from the start letter.
    std::size_t effective = 1;
    for (std::size_t b = 1; b < sigma; ++b)
        if (out.recurrence.letter_sets[0][b]) ++effective;
    out.degenerate = effective == 1;
    if (out.degenerate)
        out.reasons.push_back("fixed point uses a single effective letter (0^inf)");

    if (!out.recurrence.recurrent) {
        out.verdict = Verdict::NotRecurrentHenceNotWelldoc;
        out.reasons.push_back("not recurrent: some X_u is finite");
        return out;
    }
    if (out.determinant != 1 && out.determinant != -1) {
        out.verdict = Verdict::NotWelldoc;
        out.reasons.push_back("det A = " + out.determinant.str() + " is not +-1");
        return out;
    }

    ReturnSet rs = returns_complete(phi);
    IntVectorSet vecs;
    for (const Parikh& p : rs.vectors) vecs.emplace_back(p.begin(), p.end());
    GenerationCertificate cert = generates_Z(vecs);
    out.returns = std::move(rs);
    out.generation = cert;

    if (sigma == 2) {
        // det = +-1 suffices on a binary alphabet; the generation test is
        // still run as a consistency check.
        out.binary_shortcut_used = true;
        if (!cert.generates)
            throw std::logic_error(
                "binary recurrent morphism with det +-1 whose return vectors "
                "do not generate Z^2; this contradicts the decision theorem");
        out.verdict = Verdict::Welldoc;
        out.reasons.push_back("binary: recurrent and det A = " + out.determinant.str());
        return out;
    }

    if (cert.generates) {
        out.verdict = Verdict::Welldoc;
        out.reasons.push_back("return Parikh vectors generate Z^sigma");
    } else {
        out.verdict = Verdict::NotWelldoc;
        out.reasons.push_back("return Parikh vectors fail to generate Z^sigma (prime " +
                              std::to_string(*cert.failing_prime) + ")");
    }
    return out;
}

namespace {

unsigned long long pow_check(unsigned long long m, std::size_t sigma) {
    unsigned long long space = 1;
    for (std::size_t i = 0; i < sigma; ++i) {
        if (space > 100'000'000ull / m)
            throw std::invalid_argument("m^sigma too large for enumeration");
        space *= m;
    }
    return space;
}

unsigned long long encode(const VecModM& v, unsigned long long m) {
    unsigned long long code = 0;
    for (unsigned long long x : v) code = code * m + x;
    return code;
}

}  // namespace

EmpiricalCell empirical_X(PrefixStream& w, const Word& u, unsigned long long m,
                          std::size_t horizon) {
    if (m < 1) throw std::invalid_argument("modulus must be >= 1");
    if (u.empty()) throw std::invalid_argument("factor must be non-empty");
    const std::size_t sigma = w.sigma();
    unsigned long long space = pow_check(m, sigma);

    EmpiricalCell cell;
    cell.factor = u;
    cell.modulus = m;
    cell.space = space;

    const Word& prefix = w.prefix(horizon);
    std::vector<bool> present(space, false);
    VecModM counts(sigma, 0);
    std::size_t observed = 0, last_growth = 0;

    for (std::size_t i = 0; i + u.size() <= horizon; ++i) {
        if (std::equal(u.begin(), u.end(), prefix.begin() + i)) {
            ++cell.occurrences;
            unsigned long long code = encode(counts, m);
            if (!present[code]) {
                present[code] = true;
                ++observed;
                last_growth = i;
            }
        }
        counts[prefix[i]] = (counts[prefix[i]] + 1) % m;
    }
    cell.observed = observed;
    cell.stabilized = cell.occurrences > 0 && last_growth < horizon / 2;

    for (unsigned long long code = 0; code < space; ++code) {
        if (!present[code]) continue;
        VecModM v(sigma);
        unsigned long long c = code;
        for (std::size_t i = sigma; i-- > 0;) {
            v[i] = c % m;
            c /= m;
        }
        cell.vectors.push_back(std::move(v));
    }

    if (observed < space) {
        // Lexicographically least missing vector.
        for (unsigned long long code = 0; code < space; ++code) {
            if (!present[code]) {
                VecModM v(sigma);
                unsigned long long c = code;
                for (std::size_t i = sigma; i-- > 0;) {
                    v[i] = c % m;
                    c /= m;
                }
                cell.witness = std::move(v);
                break;
            }
        }
    }
    if (cell.occurrences == 0)
        throw std::domain_error("factor does not occur within horizon");
    return cell;
}

EmpiricalReport empirical_welldoc(const Morphism& phi, std::size_t lmax,
                                  unsigned long long mmax, std::size_t horizon) {
    PrefixStream w(phi, 0);
    EmpiricalReport report;
    report.horizon = horizon;

    bool any_inconclusive = false;
    for (std::size_t len = 1; len <= lmax && len <= horizon; ++len) {
        for (const Word& u : factors(w, len, horizon)) {
            for (unsigned long long m = 2; m <= mmax; ++m) {
                EmpiricalCell cell = empirical_X(w, u, m, horizon);
                bool full = cell.observed == cell.space;
                if (!full) {
                    if (cell.stabilized && cell.occurrences >= 2) {
                        if (!report.first_falsified)
                            report.first_falsified = report.cells.size();
                    } else {
                        any_inconclusive = true;
                    }
                }
                report.cells.push_back(std::move(cell));
            }
        }
    }
    if (report.first_falsified)
        report.verdict = EmpiricalVerdict::Falsified;
    else if (any_inconclusive)
        report.verdict = EmpiricalVerdict::Inconclusive;
    else
        report.verdict = EmpiricalVerdict::ConsistentWithWelldoc;
    return report;
}

std::string WelldocVerdict::to_json(const Morphism& phi) const {
    nlohmann::json j;
    j["morphism"] = phi.to_string();
    j["recurrent"] = recurrence.recurrent;
    j["det"] = determinant.str();
    j["binary_shortcut_used"] = binary_shortcut_used;
    j["degenerate"] = degenerate;
    j["verdict"] = verdict_name(verdict);
    j["reasons"] = reasons;
    if (returns) j["returns"] = nlohmann::json::parse(returns->to_json());
    if (generation) {
        nlohmann::json g;
        g["answer"] = generation->generates;
        g["basis"] = generation->basis_indices;
        g["k"] = generation->basis_det.str();
        g["primes_checked"] = generation->primes_checked;
        if (generation->failing_prime) g["failing_prime"] = *generation->failing_prime;
        j["generates_Z"] = g;
    }
    return j.dump(2);
}

std::string EmpiricalReport::to_json(const Morphism& phi) const {
    nlohmann::json j;
    j["morphism"] = phi.to_string();
    j["horizon"] = horizon;
    switch (verdict) {
        case EmpiricalVerdict::ConsistentWithWelldoc: j["verdict"] = "CONSISTENT-WITH-WELLDOC"; break;
        case EmpiricalVerdict::Falsified: j["verdict"] = "FALSIFIED"; break;
        case EmpiricalVerdict::Inconclusive: j["verdict"] = "INCONCLUSIVE"; break;
    }
    auto& cells = j["empirical"] = nlohmann::json::array();
    for (const EmpiricalCell& c : this->cells) {
        nlohmann::json e;
        e["u"] = word_to_string(c.factor);
        e["m"] = c.modulus;
        e["coverage"] = static_cast<double>(c.observed) / static_cast<double>(c.space);
        e["observed"] = c.observed;
        e["space"] = c.space;
        e["occurrences"] = c.occurrences;
        e["stabilized"] = c.stabilized;
        if (c.witness) e["witness"] = *c.witness;
        cells.push_back(std::move(e));
    }
    if (first_falsified) j["first_falsified"] = *first_falsified;
    return j.dump(2);
}

}  // namespace welldoc
