#ifndef SQPOW_JSON_HPP
#define SQPOW_JSON_HPP

#include <json.hpp>

namespace sqpow {

/// Insertion-ordered JSON so that reports have a fixed key order.
using Json = nlohmann::ordered_json;

}  // namespace sqpow

#endif  // SQPOW_JSON_HPP
