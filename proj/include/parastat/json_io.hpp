#pragma once

#include "parastat/algebra_element.hpp"
#include "parastat/fock.hpp"
#include "parastat/gz.hpp"
#include "parastat/word.hpp"

#include <json.hpp>

namespace parastat {

// JSON conventions: rationals are canonical strings ("0", "3", "-1/2"),
// QSqrt2 is {"a": ..., "b": ...}, words are integer arrays, patterns are
// arrays of rows with the top row last.

nlohmann::json to_json(const Rational &r);
nlohmann::json to_json(const QSqrt2 &q);
nlohmann::json to_json(const WeightVector &w, int n);
nlohmann::json to_json(const AlgebraElement &x); // sparse entry list
nlohmann::json to_json(const CreationWord &w);
nlohmann::json to_json(const FockVector &v);
nlohmann::json to_json(const GZPattern &p);
nlohmann::json to_json(const InfiniteGZPattern &p);

// {weight, words, rank, radicalDim} summary row of a dimension table.
nlohmann::json block_summary(const LevelBlock &b);

} // namespace parastat
