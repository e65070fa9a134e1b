#pragma once
// random valid descriptors for property tests
#include "platy/cosmos.hpp"

#include <random>

namespace testing_support {

using namespace platy;

inline Q rand_q(std::mt19937& rng, int maxnum = 9, int maxden = 3) {
    std::uniform_int_distribution<int> n(1, maxnum), d(1, maxden);
    Q x(n(rng), d(rng));
    x.canonicalize();
    return x;
}

inline Descriptor random_descriptor(CosmType t, std::mt19937& rng, int maxnum = 9, int maxden = 3) {
    std::uniform_int_distribution<int> coin(0, 5);
    for (;;) {
        std::vector<Q> v;
        auto& info = type_info(t);
        for (size_t i = 0; i < info.params.size(); ++i) v.push_back(rand_q(rng, maxnum, maxden));
        if (t == CosmType::c1) {
            for (auto& x : v)
                if (coin(rng) < 2) x = 0;
        }
        if (t == CosmType::c2 || t == CosmType::pa1 || t == CosmType::ma1) {
            // sometimes a zero base conorm
            if (coin(rng) == 0) v[1 + coin(rng) % 3] = 0;
        }
        Chirality c = Chirality::none;
        if (info.metachiral) c = coin(rng) % 2 ? Chirality::dextral : Chirality::sinistral;
        auto d = make_descriptor(t, v, c);
        try {
            return canonicalize(d);
        } catch (const DomainError&) {
        }
    }
}

}  // namespace testing_support
