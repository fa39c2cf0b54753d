// serial reference vs OpenMP kernels

#include <benchmark/benchmark.h>

#include <random>

#include "mu/groebner.hpp"
#include "mu/pipeline.hpp"

using namespace mu;

namespace {

std::vector<MultiPoly> random_polys(int count, int terms, int deg, unsigned seed, const Ring& R) {
    std::mt19937 rng(seed);
    std::vector<MultiPoly> out;
    for (int k = 0; k < count; ++k) {
        MultiPoly p(R);
        for (int t = 0; t < terms; ++t) {
            Exp e;
            int d = int(rng() % (deg + 1));
            for (int i = 0; i < d; ++i) e[int(rng() % R->nvars())]++;
            p += MultiPoly::monomial(R, e, Rational(long(rng() % 19) - 9, long(rng() % 4) + 1));
        }
        out.push_back(p);
    }
    return out;
}

void BM_NormalForms(benchmark::State& st) {
    Ring R = make_ring({"a", "b", "c", "d", "e"});
    auto gb = buchberger({parse_poly("a*b - c^2", R), parse_poly("b*d - a*e", R), parse_poly("c^3 - d*e^2", R),
                          parse_poly("a^2 - e^2", R)});
    auto fs = random_polys(256, 8, 6, 7, R);
    bool par = st.range(0) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(normal_forms(fs, gb, par));
    st.SetLabel(par ? "parallel" : "serial");
}
BENCHMARK(BM_NormalForms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Buchberger(benchmark::State& st) {
    Ring R = make_ring({"a", "b", "c", "d"});
    GbOptions opt;
    opt.parallel = st.range(0) != 0;
    std::vector<MultiPoly> g = {parse_poly("a^2 + b*c - d", R), parse_poly("b^2 - a*d + c", R),
                                parse_poly("c^2 + a*b - 1", R), parse_poly("d^2 - a*c + b", R)};
    for (auto _ : st) benchmark::DoNotOptimize(buchberger(g, opt));
    st.SetLabel(opt.parallel ? "parallel" : "serial");
}
BENCHMARK(BM_Buchberger)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Pipeline(benchmark::State& st) {
    PipelineConfig cfg;
    cfg.parallel = st.range(0) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(run_pipeline(cfg));
    st.SetLabel(cfg.parallel ? "parallel" : "serial");
}
BENCHMARK(BM_Pipeline)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
