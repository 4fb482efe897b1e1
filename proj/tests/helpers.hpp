#pragma once

#include "dpoly/lie_pair.hpp"
#include "dpoly/uea.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef DPOLY_DATA_DIR
#define DPOLY_DATA_DIR "."
#endif

namespace dpoly::testing {

inline std::string pair_path(const std::string& name)
{
    return std::string(DPOLY_DATA_DIR) + "/pairs/" + name + ".json";
}

inline LiePair load_pair(const std::string& name)
{
    auto result = load_lie_pair_file(pair_path(name));
    if (!result.ok())
        throw std::runtime_error("corpus pair failed validation: " + name);
    return *result.pair;
}

inline std::vector<std::string> corpus_names()
{
    return {"sl2_borel", "heisenberg_center", "solvable2_sub1", "abelian2_sub1"};
}

// Independent straightening oracle: normal-order a plain word (letters are
// storage positions) by rewriting the leftmost adjacent inversion with
// xy -> yx + [x,y]. No exponent packing, no memoization; shares nothing
// with UEnv::multiply beyond the structure constants.
class WordOracle {
public:
    explicit WordOracle(const UEnv& env) : env_(env) {}

    using Word = std::vector<std::size_t>;

    UEnv::Elem normal_form(const Word& word, const Rational& coeff = Rational(1)) const
    {
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            if (word[i] <= word[i + 1])
                continue;
            // swap + bracket at the first inversion
            Word swapped = word;
            std::swap(swapped[i], swapped[i + 1]);
            UEnv::Elem acc = normal_form(swapped, coeff);
            for (std::size_t z = 0; z < env_.n(); ++z) {
                const Rational c = bracket_coeff(word[i], word[i + 1], z);
                if (c == 0)
                    continue;
                Word contracted;
                contracted.reserve(word.size() - 1);
                contracted.insert(contracted.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
                contracted.push_back(z);
                contracted.insert(contracted.end(), word.begin() + static_cast<std::ptrdiff_t>(i) + 2, word.end());
                for (const auto& [mono, v] : normal_form(contracted, coeff * c)) {
                    acc[mono] += v;
                    if (acc[mono] == 0)
                        acc.erase(mono);
                }
            }
            return acc;
        }
        // already sorted: collect exponents
        UEnv::Mono mono(env_.n(), 0);
        for (std::size_t letter : word)
            ++mono[letter];
        return UEnv::Elem{{mono, coeff}};
    }

    UEnv::Elem multiply_words(const Word& a, const Word& b) const
    {
        Word ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        return normal_form(ab);
    }

private:
    Rational bracket_coeff(std::size_t s, std::size_t t, std::size_t z) const
    {
        return env_.pair().c(env_.original_of_storage(s), env_.original_of_storage(t),
                             env_.original_of_storage(z));
    }

    const UEnv& env_;
};

inline UEnv::Mono mono_from_word(const UEnv& env, const std::vector<std::size_t>& word)
{
    UEnv::Mono mono(env.n(), 0);
    for (std::size_t letter : word)
        ++mono[letter];
    return mono;
}

} // namespace dpoly::testing
