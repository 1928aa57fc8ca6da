#include "vee/corpus.hpp"

#include "vee/arrangements.hpp"
#include "vee/errors.hpp"
#include "vee/flatsections.hpp"
#include "vee/json_io.hpp"
#include "vee/veecheck.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace vee {

namespace {

unsigned thread_budget(std::size_t jobs) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("VEE_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) n = static_cast<unsigned>(v);
    }
    return std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(jobs, 1)));
}

std::string join_longs(const std::vector<long long>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

CorpusRow run_entry(const std::string& corpus_dir, const Json& entry) {
    CorpusRow row;
    row.name = entry.at("name").get<std::string>();
    const Json& expect = entry.at("expect");
    try {
        std::ifstream in(corpus_dir + "/" + entry.at("file").get<std::string>());
        if (!in) throw InputError("cannot open " + entry.at("file").get<std::string>());
        Json sysj = Json::parse(in);
        CovectorSystem sys = system_from_json(sysj).system;
        row.count = sys.size();

        std::vector<std::string> mismatches;
        auto expect_eq = [&](bool ok, const std::string& what) {
            if (!ok) mismatches.push_back(what);
        };

        expect_eq(row.count == expect.at("count").get<std::size_t>(),
                  "covector count " + std::to_string(row.count));

        std::string mode = expect.value("check", "vee");
        if (mode == "vee") {
            bool vee_ok = false, hol_ok = false;
            try {
                vee_ok = vee_check(sys).is_vee_system;
                hol_ok = holonomy_check(sys).passes;
                row.vee_status = vee_ok ? "vee" : "not-vee";
            } catch (const DegenerateFormError&) {
                row.vee_status = "degenerate";
            }
            expect_eq(vee_ok, "vee check");
            expect_eq(hol_ok == vee_ok, "holonomy agreement");
        } else if (mode == "complex_euclidean") {
            try {
                vee_check(sys);
                row.vee_status = "unexpected-nondegenerate";
                mismatches.push_back("expected a degenerate canonical form");
            } catch (const DegenerateFormError&) {
                row.vee_status = "degenerate";
            }
            auto wd = well_distributed_check(sys, RatMatrix::identity(sys.dimension()));
            expect_eq(wd.proportional, "well-distributed");
            if (expect.contains("mu_with_identity"))
                expect_eq(wd.mu && *wd.mu == Rational::parse(expect.at("mu_with_identity").get<std::string>()),
                          "proportionality scalar");
        } else {
            throw InputError("unknown check mode '" + mode + "'");
        }

        MultiPoly pi = poincare_polynomial(intersection_lattice(sys));
        auto factors = factorization_check(pi);
        if (expect.contains("poincare_factors")) {
            auto want = expect.at("poincare_factors").get<std::vector<long long>>();
            expect_eq(factors.has_value() && *factors == want,
                      "poincare factorization " + (factors ? join_longs(*factors) : std::string("failed")));
            row.exponents = "exponents " + (factors ? join_longs(*factors) : std::string("-"));
        }
        if (expect.contains("poincare_coeffs")) {
            std::vector<Rational> want;
            for (const auto& x : expect.at("poincare_coeffs")) want.push_back(rational_from_json(x));
            std::vector<Rational> got(pi.total_degree() + 1);
            for (const auto& [e, c] : pi.terms()) got[e[0]] = c;
            expect_eq(got == want, "poincare coefficients");
            std::ostringstream os;
            os << "poincare ";
            for (std::size_t i = 0; i < got.size(); ++i) os << (i ? "," : "") << got[i].str();
            row.exponents = os.str();
        }
        if (expect.value("factorizable", true) == false)
            expect_eq(!factors.has_value(), "expected non-factorizable poincare polynomial");

        if (expect.contains("harmonic_degrees")) {
            auto want = expect.at("harmonic_degrees").get<std::vector<int>>();
            HarmonicResult hr = harmonic_test(sys);
            expect_eq(hr.is_harmonic && hr.degrees == want, "harmonic degrees");
        } else if (expect.value("harmonic", true) == false) {
            HarmonicResult hr = harmonic_test(sys);
            expect_eq(!hr.is_harmonic && hr.search_exhausted, "expected non-harmonic");
        }

        row.matches = mismatches.empty();
        if (!row.matches) {
            std::ostringstream os;
            for (std::size_t i = 0; i < mismatches.size(); ++i) os << (i ? "; " : "") << mismatches[i];
            row.detail = os.str();
        }
    } catch (const std::exception& e) {
        row.vee_status = "error";
        row.matches = false;
        row.detail = e.what();
    }
    return row;
}

} // namespace

CorpusResult corpus_run(const std::string& corpus_dir, const std::string& only) {
    std::ifstream in(corpus_dir + "/expectations.json");
    if (!in) throw InputError("corpus expectations not found under '" + corpus_dir + "'");
    Json manifest = Json::parse(in);

    std::vector<Json> entries;
    for (const auto& entry : manifest.at("entries")) {
        if (!only.empty() && entry.at("name").get<std::string>().find(only) == std::string::npos) continue;
        entries.push_back(entry);
    }
    if (entries.empty()) throw InputError(only.empty() ? "empty corpus" : "no corpus entry matches '" + only + "'");

    CorpusResult result;
    result.rows.resize(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= entries.size()) return;
            result.rows[i] = run_entry(corpus_dir, entries[i]);
        }
    };
    unsigned nthreads = thread_budget(entries.size());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::sort(result.rows.begin(), result.rows.end(),
              [](const CorpusRow& a, const CorpusRow& b) { return a.name < b.name; });
    result.all_match = std::all_of(result.rows.begin(), result.rows.end(),
                                   [](const CorpusRow& r) { return r.matches; });

    std::ostringstream os;
    os << "name                      |A|  check       exponents-or-poincare      matches\n";
    os << "------------------------- ---- ----------- -------------------------- -------\n";
    for (const auto& r : result.rows) {
        os << r.name;
        for (std::size_t i = r.name.size(); i < 26; ++i) os << ' ';
        std::string cnt = std::to_string(r.count);
        os << cnt;
        for (std::size_t i = cnt.size(); i < 5; ++i) os << ' ';
        os << r.vee_status;
        for (std::size_t i = r.vee_status.size(); i < 12; ++i) os << ' ';
        os << r.exponents;
        for (std::size_t i = r.exponents.size(); i < 27; ++i) os << ' ';
        os << (r.matches ? "yes" : "NO");
        if (!r.matches) os << "  [" << r.detail << "]";
        os << "\n";
    }
    result.table = os.str();
    return result;
}

} // namespace vee
