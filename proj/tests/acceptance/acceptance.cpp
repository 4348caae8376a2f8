// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every comparison is exact; the only tolerances are the wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

#include "cli_app.hpp"
#include "mixvol/mixvol.hpp"
#include "support.hpp"

using namespace mixvol;
using mixvol::testing::Gen;

namespace {

constexpr double kCounterexampleSeconds = 1.0;
constexpr double kRouteSeconds = 30.0;
constexpr double kSearchSeconds = 300.0;
constexpr double kPermanentSeconds = 1.0;

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

int failures = 0;

void criterion(int id, const char* name, double limit, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs >= limit) o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s");
    std::printf("[%s] %d %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.detail.empty() ? "" : " - ",
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
}

std::vector<Body> boxes(const Matrix& sides) { return boxes_from_sides(sides); }

unsigned jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

Outcome counterexample_values() {
    Outcome o;
    const auto b = boxes(mixvol::testing::counterexample_sides());
    const Body &a1 = b[0], &a2 = b[1], &a3 = b[2];
    o.require(mixed_volume(std::vector<Body>{a1, a2, a3}) == Rational(4, 9), "V(A1,A2,A3)");
    o.require(mixed_volume(std::vector<Body>{a1, a1, a2}) == Rational(5, 3), "V(A1,A1,A2)");
    o.require(mixed_volume(std::vector<Body>{a2, a2, a3}) == Rational(5, 9), "V(A2,A2,A3)");
    o.require(mixed_volume(std::vector<Body>{a3, a3, a1}) == Rational(1, 9), "V(A3,A3,A1)");
    const Report r = gromov_triple_check(b);
    o.require(r.verdict == Verdict::fails, "triple check does not fail");
    o.require(r.certificates.size() == 1 && r.certificates[0].lhs == Rational(64, 729) &&
                  r.certificates[0].rhs == Rational(75, 729),
              "certificate sides");
    o.require(r.diagnostics.at("comparison").find("64/729 < 75/729") != std::string::npos,
              "comparison text: " + r.diagnostics.at("comparison"));
    if (o.pass) o.detail = r.diagnostics.at("comparison");
    return o;
}

Outcome route_agreement() {
    Outcome o;
    Gen g(2024);
    for (int t = 0; t < 200 && o.pass; ++t) {
        const auto n = static_cast<std::size_t>(g.integer(2, 4));
        const Matrix sides = g.side_matrix(n, n);
        const VolumePolynomial perm = volume_polynomial_boxes(sides);
        const BodyTuple tuple(boxes(sides));
        const VolumePolynomial pol = volume_polynomial(tuple);
        const VolumePolynomial interp = volume_polynomial_interpolated(tuple);
        o.require(perm == pol && pol == interp, "routes differ on instance " + std::to_string(t));
        o.require(mixed_volume_boxes(sides) == mixed_volume(tuple.bodies()), "mixed volume differs on " + std::to_string(t));
    }
    if (o.pass) o.detail = "200 tuples";
    return o;
}

Outcome diagonal_correspondence() {
    Outcome o;
    Gen g(2025);
    for (int t = 0; t < 100 && o.pass; ++t) {
        const auto n = static_cast<std::size_t>(g.integer(2, 4));
        Matrix d(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d(i, j) = g.rational(9, 5, false);
        std::vector<SymMatrix> ms;
        for (std::size_t i = 0; i < n; ++i) ms.push_back(SymMatrix::diagonal(d.row(i)));
        o.require(mixed_discriminant(ms) == permanent(d) / factorial(n), "mixed discriminant on " + std::to_string(t));
        o.require(discriminant_polynomial(MatrixTuple(ms)) == volume_polynomial_boxes(d), "polynomial on " + std::to_string(t));
    }
    if (o.pass) o.detail = "100 tuples";
    return o;
}

Outcome af_suite() {
    Outcome o;
    Gen g(2026);
    int bodies_checked = 0, matrices_checked = 0;
    for (int t = 0; t < 200 && o.pass; ++t) {
        const auto n = static_cast<std::size_t>(g.integer(2, 4));
        const int kind = static_cast<int>(g.integer(0, n <= 3 ? 2 : 1));  // 0 boxes, 1 segments, 2 mixed
        std::vector<Body> tuple;
        for (std::size_t i = 0; i < n; ++i) {
            const bool segment = kind == 1 || (kind == 2 && g.integer(0, 1) == 1);
            if (segment) {
                Point v(n);
                for (auto& c : v) c = g.rational(5, 3);
                tuple.push_back(Zonotope(n, {v}));
            } else {
                tuple.push_back(boxes(g.side_matrix(1, n)).front());
            }
        }
        const Report r = af_check_volumes(tuple);
        o.require(r.verdict == Verdict::holds, "bodies instance " + std::to_string(t) + " gives " + to_string(r.verdict));
        ++bodies_checked;
    }
    for (int t = 0; t < 100 && o.pass; ++t) {
        std::vector<SymMatrix> ms;
        for (int i = 0; i < 3; ++i) ms.emplace_back(g.positive_definite(3));
        const Report r = af_check_discriminants(ms);
        o.require(r.verdict == Verdict::holds, "matrix instance " + std::to_string(t));
        ++matrices_checked;
    }
    if (o.pass) o.detail = std::to_string(bodies_checked) + " body tuples, " + std::to_string(matrices_checked) + " PD tuples";
    return o;
}

Outcome segment_vs_envelope() {
    Outcome o;
    const std::vector<Rational> grid{0, 1, 2, 3};
    int instances = 0, nonvacuous = 0;
    for (std::uint64_t idx = 0; idx < 256; ++idx) {
        const auto digits = detail::exhaustive_digits(idx, 4, 4);
        const Matrix sides{{grid[digits[0]], grid[digits[1]]}, {grid[digits[2]], grid[digits[3]]}};
        const VolumePolynomial vp = volume_polynomial(BodyTuple(boxes(sides)));
        const Verdict env = gromov_concavity(vp).verdict, seg = segment_concavity(vp).verdict;
        o.require(env == seg, "instance " + std::to_string(idx) + ": envelope " + to_string(env) + ", segment " + to_string(seg));
        ++instances;
        nonvacuous += env != Verdict::vacuous;
    }
    if (o.pass) o.detail = std::to_string(instances) + " instances, " + std::to_string(nonvacuous) + " non-vacuous";
    return o;
}

Outcome van_der_waerden() {
    Outcome o;
    for (std::size_t n = 2; n <= 6; ++n) {
        const VdwResult r = vdw_check(Matrix(n, n, Rational(1, static_cast<long>(n))));
        o.require(r.margin.is_zero(), "flat margin n=" + std::to_string(n));
        o.require(r.permanent == factorial(n) / pow(Rational(static_cast<long>(n)), n), "flat permanent n=" + std::to_string(n));
    }
    Gen g(2027);
    for (int t = 0; t < 100 && o.pass; ++t) {
        const auto n = static_cast<std::size_t>(g.integer(2, 6));
        const VdwResult r = vdw_check(g.doubly_stochastic(n, static_cast<std::size_t>(g.integer(1, 5))));
        o.require(r.holds && r.margin.sign() >= 0, "random instance " + std::to_string(t));
    }
    if (o.pass) o.detail = "flat n=2..6, 100 random";
    return o;
}

Outcome search_rediscovery() {
    Outcome o;
    SearchSpace space{3, 3, {0, Rational(1, 3), 1, 5}};
    SearchConfig config;
    config.mode = SearchMode::exhaustive;
    config.target = SearchTarget::triple;
    config.jobs = jobs();
    const SearchResult r = search(space, config);
    o.require(!r.findings.empty(), "no findings");
    bool counterexample_seen = false;
    std::size_t verified = 0;
    for (const auto& f : r.findings) {
        if (verify_finding(f)) ++verified;
        if (f.side_matrix == mixvol::testing::counterexample_sides()) {
            counterexample_seen = true;
            o.require(f.violation_ratio == Rational(75, 64), "counterexample ratio " + f.violation_ratio.str());
        }
    }
    o.require(verified == r.findings.size(), std::to_string(r.findings.size() - verified) + " findings fail to verify");
    o.require(counterexample_seen, "counterexample matrix not among findings");
    if (o.pass)
        o.detail = std::to_string(r.evaluations) + " evaluations, " + std::to_string(r.findings.size()) +
                   " findings, best ratio " + r.findings.front().violation_ratio.str();
    return o;
}

Outcome determinism() {
    Outcome o;
    auto run_search = [](const char* jobs_arg) {
        const std::vector<std::string> args{"--format", "json", "--jobs", jobs_arg, "search", "--grid", "0,1/3,1,5",
                                            "--mode", "random", "--seed", "20240601", "--max-evals", "2000"};
        std::istringstream in;
        std::ostringstream out, err;
        const int code = cli::run(args, in, out, err);
        return std::make_pair(code, out.str());
    };
    const auto a = run_search("1"), b = run_search("1"), c = run_search("4");
    o.require(a.first == 0 || a.first == 3, "exit code " + std::to_string(a.first));
    o.require(a.second == b.second, "two runs differ");
    o.require(a.second == c.second, "--jobs 1 and --jobs 4 differ");
    o.require(a.second.find("\"summary\"") != std::string::npos, "no summary line");
    if (o.pass) o.detail = std::to_string(a.second.size()) + " bytes identical x3";
    return o;
}

Outcome permanent_floor() {
    Outcome o;
    Gen g(2028);
    Matrix m(10, 10);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) m(i, j) = Rational(g.integer(10, 99), g.integer(10, 99));
    const auto t0 = std::chrono::steady_clock::now();
    const Rational p = permanent(m);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < kPermanentSeconds, "permanent took " + std::to_string(secs) + " s");
    o.require(p.sign() > 0, "positive entries must give a positive permanent");
    o.require(permanent(m.transpose()) == p, "transpose changes the permanent");
    if (o.pass) o.detail = "permanent " + std::to_string(secs) + " s";
    return o;
}

}  // namespace

int main() {
    criterion(1, "counterexample values and triple check", kCounterexampleSeconds, counterexample_values);
    criterion(2, "permanent = polarization = interpolation on 200 box tuples", kRouteSeconds, route_agreement);
    criterion(3, "diagonal matrices match boxes on 100 tuples", 0, diagonal_correspondence);
    criterion(4, "Alexandrov-Fenchel holds on bodies and PD matrices", 0, af_suite);
    criterion(5, "envelope verdict equals segment verdict for k = n = 2", 0, segment_vs_envelope);
    criterion(6, "van der Waerden bound", 0, van_der_waerden);
    criterion(7, "exhaustive search rediscovers the counterexample", kSearchSeconds, search_rediscovery);
    criterion(8, "random search JSON is byte-identical across runs and jobs", 0, determinism);
    criterion(9, "10x10 rational permanent", kPermanentSeconds * 2, permanent_floor);
    std::printf("%s: %d failure(s)\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}
