// Literal basis lists for the multilinear components of degree 4 and 5.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "nilcube/words.hpp"

namespace reference {

inline std::vector<nilcube::Word> words(const std::vector<std::string>& ws) {
  std::vector<nilcube::Word> out;
  for (const auto& w : ws) out.push_back(nilcube::Word::parse(w));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<nilcube::Word> p2_1111() {
  return words({"1234", "1243", "1324", "1342", "1423", "2134", "2143", "2314",
                "2341", "2413", "3124", "4123"});
}

inline std::vector<nilcube::Word> p2_11111() {
  return words({"12345", "12354", "12435", "12453", "12534", "13245", "13254",
                "13425", "13452", "13524", "14235", "15234", "21345", "23145",
                "23415", "23451", "23514", "31245", "41235", "51234"});
}

inline std::vector<nilcube::Word> p3_1111() {
  return words({"1234", "1243", "1324", "1342", "1423", "2134", "2143", "2314",
                "2341", "2413", "3124", "3412"});
}

inline std::vector<nilcube::Word> p3_11111() {
  return words({"12345", "12354", "12435", "12453", "12534", "13245", "13254",
                "13425", "13452", "13524", "14235", "14523", "21345", "21354",
                "21435", "21453", "21534", "23145", "23154", "23415", "23451",
                "23514", "24135", "24513", "31245", "34125", "34512"});
}

inline std::vector<nilcube::Word> p0_1111() { return p3_1111(); }

inline std::vector<nilcube::Word> p0_11111() {
  return words({"12345", "12354", "12435", "12453", "12534", "13245", "13254",
                "13425", "13452", "13524", "14235", "14523", "23145", "23415",
                "23514"});
}

inline std::vector<nilcube::Word> p0_2111() {
  return words({"11234", "11324", "11423", "21134", "21143", "23114", "24113"});
}

}  // namespace reference
