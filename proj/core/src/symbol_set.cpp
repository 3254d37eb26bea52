#include "ulam/symbol_set.hpp"

#include <algorithm>

namespace ulam {

bool lex_less(const SymbolSet& a, const SymbolSet& b) {
    const auto av = a.to_vector();
    const auto bv = b.to_vector();
    return std::lexicographical_compare(av.begin(), av.end(), bv.begin(), bv.end());
}

}  // namespace ulam
