#include <benchmark/benchmark.h>

#include "chern/corpus.hpp"
#include "chern/hilbert.hpp"
#include "chern/quotient.hpp"

namespace {

using namespace chern;

const CorpusEntry& family_entry() {
    static const CorpusEntry entry =
        build_goto_sakurai(2, 2, GotoSakuraiVariant::xm_squared);
    return entry;
}

void BM_GroebnerFamilyDefining(benchmark::State& state) {
    const CorpusEntry& entry = family_entry();
    for (auto _ : state) {
        // Fresh ideal handle each round so the cached basis is not reused.
        IdealHandle q(entry.ring, entry.parameters[0].ideal.generators());
        benchmark::DoNotOptimize(q.groebner_basis().elements.size());
    }
}
BENCHMARK(BM_GroebnerFamilyDefining);

void BM_ColengthFamily(benchmark::State& state) {
    const CorpusEntry& entry = family_entry();
    for (auto _ : state) {
        IdealHandle q(entry.ring, entry.parameters[0].ideal.generators());
        benchmark::DoNotOptimize(colength(q));
    }
}
BENCHMARK(BM_ColengthFamily);

void BM_HilbertSamuelTableFamily(benchmark::State& state) {
    const CorpusEntry& entry = family_entry();
    for (auto _ : state) {
        IdealHandle q(entry.ring, entry.parameters[0].ideal.generators());
        benchmark::DoNotOptimize(hilbert_samuel_table(q, 4).values.size());
    }
}
BENCHMARK(BM_HilbertSamuelTableFamily);

void BM_IndexOfReducibility(benchmark::State& state) {
    const CorpusEntry& entry = family_entry();
    for (auto _ : state) {
        IdealHandle q(entry.ring, entry.parameters[0].ideal.generators());
        benchmark::DoNotOptimize(index_of_reducibility(q).index_of_reducibility);
    }
}
BENCHMARK(BM_IndexOfReducibility);

} // namespace

BENCHMARK_MAIN();
