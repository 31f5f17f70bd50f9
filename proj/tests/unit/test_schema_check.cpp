#include <doctest.h>

#include "schema_check.hpp"

using schema_check::Json;
using schema_check::validate;

TEST_CASE("schema validation accepts a conforming object") {
  const Json schema = Json::parse(R"({
    "type": "object",
    "required": ["name", "count"],
    "additionalProperties": false,
    "properties": {
      "name": {"type": "string", "pattern": "^[a-z]+$"},
      "count": {"type": "integer", "minimum": 0},
      "tags": {"type": "array", "items": {"enum": ["a", "b"]}, "maxItems": 2}
    }
  })");
  CHECK(validate(schema, Json{{"name", "abc"}, {"count", 3}}).ok);
  CHECK(validate(schema, Json{{"name", "abc"}, {"count", 0}, {"tags", Json::array({"a"})}}).ok);
}

TEST_CASE("schema validation rejects each kind of violation") {
  const Json schema = Json::parse(R"({
    "type": "object",
    "required": ["name"],
    "additionalProperties": false,
    "properties": {
      "name": {"type": "string", "pattern": "^[a-z]+$"},
      "count": {"type": "integer", "minimum": 0, "maximum": 9},
      "mode": {"const": "exact"}
    }
  })");
  CHECK_FALSE(validate(schema, Json::array()).ok);                          // type
  CHECK_FALSE(validate(schema, Json::object()).ok);                        // required
  CHECK_FALSE(validate(schema, Json{{"name", "ABC"}}).ok);                 // pattern
  CHECK_FALSE(validate(schema, Json{{"name", "abc"}, {"count", -1}}).ok);  // minimum
  CHECK_FALSE(validate(schema, Json{{"name", "abc"}, {"count", 10}}).ok);  // maximum
  CHECK_FALSE(validate(schema, Json{{"name", "abc"}, {"mode", "x"}}).ok);  // const
  CHECK_FALSE(validate(schema, Json{{"name", "abc"}, {"zzz", 1}}).ok);     // additional

  const auto result = validate(schema, Json{{"name", "abc"}, {"count", -1}});
  CHECK(result.error.find("count") != std::string::npos);
}

TEST_CASE("patternProperties claim keys before additionalProperties") {
  const Json schema = Json::parse(R"({
    "type": "object",
    "additionalProperties": false,
    "patternProperties": {
      "^[0-9]+$": {"type": "string", "pattern": "^[0-9]+$"}
    }
  })");
  CHECK(validate(schema, Json{{"12", "34"}}).ok);
  CHECK_FALSE(validate(schema, Json{{"12", 34}}).ok);
  CHECK_FALSE(validate(schema, Json{{"word", "34"}}).ok);
}

TEST_CASE("array schemas check items and bounds") {
  const Json schema = Json::parse(R"({
    "type": "array",
    "minItems": 1,
    "maxItems": 3,
    "items": {"type": "integer", "minimum": 0}
  })");
  CHECK(validate(schema, Json::array({1, 2})).ok);
  CHECK_FALSE(validate(schema, Json::array()).ok);
  CHECK_FALSE(validate(schema, Json::array({1, 2, 3, 4})).ok);
  CHECK_FALSE(validate(schema, Json::array({1, -2})).ok);
  CHECK_FALSE(validate(schema, Json::array({"x"})).ok);
}
