#include "coloreul/json_io.hpp"

#include <algorithm>
#include <cctype>

namespace coloreul {

namespace {

[[noreturn]] void fail(std::string_view schema, const std::string& what) {
    throw SchemaError(std::string(schema) + ": " + what);
}

bool is_decimal(const Json& value) {
    if (!value.is_string()) return false;
    const auto& text = value.get_ref<const std::string&>();
    std::size_t start = !text.empty() && text[0] == '-' ? 1 : 0;
    if (start == text.size()) return false;
    return std::all_of(text.begin() + static_cast<long>(start), text.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

const Json& require(const Json& doc, const char* key, std::string_view schema) {
    if (!doc.is_object()) fail(schema, "expected an object");
    auto it = doc.find(key);
    if (it == doc.end()) fail(schema, std::string("missing key \"") + key + "\"");
    return *it;
}

int require_int(const Json& doc, const char* key, std::string_view schema, int minimum) {
    const auto& value = require(doc, key, schema);
    if (!value.is_number_integer() || value.get<long long>() < minimum) {
        fail(schema, std::string("\"") + key + "\" must be an integer >= " + std::to_string(minimum));
    }
    return value.get<int>();
}

void check_letter(const Json& value, std::string_view schema) {
    if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() || !value[1].is_number_integer()) {
        fail(schema, "letters are [value, color] integer pairs");
    }
}

void check_array_of(const Json& value, std::string_view schema, const char* what) {
    if (!value.is_array()) fail(schema, std::string("\"") + what + "\" must be an array");
}

void check_tensor(const Json& doc, std::string_view schema) {
    check_array_of(doc, schema, "tensor");
    const auto size = doc.size();
    for (const auto& row : doc) {
        if (!row.is_array() || row.size() != size) fail(schema, "tensor must be cubic");
        for (const auto& cell : row) {
            if (!cell.is_array() || cell.size() != size) fail(schema, "tensor must be cubic");
            for (const auto& value : cell) {
                if (!is_decimal(value)) fail(schema, "tensor entries are decimal strings");
            }
        }
    }
}

ColoredLetter letter_from(const Json& value) { return {value[0].get<int>(), value[1].get<int>()}; }

Json letter_json(const ColoredLetter& letter) { return Json::array({letter.value, letter.color}); }

}  // namespace

void validate_json(const Json& doc, std::string_view schema) {
    if (schema == "permutation") {
        require_int(doc, "r", schema, 1);
        const int n = require_int(doc, "n", schema, 0);
        const auto& letters = require(doc, "letters", schema);
        check_array_of(letters, schema, "letters");
        if (letters.size() != static_cast<std::size_t>(n)) fail(schema, "expected n letters");
        for (const auto& letter : letters) check_letter(letter, schema);
    } else if (schema == "poset") {
        require_int(doc, "r", schema, 1);
        require_int(doc, "n", schema, 0);
        const auto& elements = require(doc, "elements", schema);
        check_array_of(elements, schema, "elements");
        for (const auto& letter : elements) check_letter(letter, schema);
        const auto& covers = require(doc, "covers", schema);
        check_array_of(covers, schema, "covers");
        for (const auto& pair : covers) {
            if (!pair.is_array() || pair.size() != 2) fail(schema, "covers are [lower, upper] pairs");
            check_letter(pair[0], schema);
            check_letter(pair[1], schema);
        }
    } else if (schema == "series") {
        const auto& coeffs = require(doc, "t_coeffs", schema);
        check_array_of(coeffs, schema, "t_coeffs");
        if (coeffs.empty()) fail(schema, "t_coeffs must not be empty");
        for (const auto& value : coeffs) {
            if (!is_decimal(value)) fail(schema, "coefficients are decimal strings");
        }
    } else if (schema == "count") {
        if (!require(doc, "op", schema).is_string()) fail(schema, "\"op\" must be a string");
        if (!require(doc, "params", schema).is_object()) fail(schema, "\"params\" must be an object");
        if (!is_decimal(require(doc, "count", schema))) fail(schema, "\"count\" must be a decimal string");
    } else if (schema == "idempotents") {
        require_int(doc, "r", schema, 1);
        const int n = require_int(doc, "n", schema, 0);
        const auto& rows = require(doc, "idempotents", schema);
        check_array_of(rows, schema, "idempotents");
        if (rows.size() != static_cast<std::size_t>(n) + 1) fail(schema, "expected n+1 idempotents");
        for (const auto& row : rows) {
            require_int(row, "i", schema, 0);
            const auto& classes = require(row, "by_des_class", schema);
            check_array_of(classes, schema, "by_des_class");
            for (const auto& entry : classes) {
                require_int(entry, "des", schema, 0);
                if (!is_decimal(require(entry, "num", schema)) || !is_decimal(require(entry, "den", schema))) {
                    fail(schema, "num and den are decimal strings");
                }
            }
        }
        if (!is_decimal(require(doc, "common_denominator", schema))) {
            fail(schema, "\"common_denominator\" must be a decimal string");
        }
    } else if (schema == "tensor") {
        check_tensor(doc, schema);
    } else if (schema == "report") {
        if (!require(doc, "command", schema).is_string()) fail(schema, "\"command\" must be a string");
        if (!require(doc, "config", schema).is_object()) fail(schema, "\"config\" must be an object");
        if (!require(doc, "seed", schema).is_number_unsigned()) fail(schema, "\"seed\" must be an unsigned integer");
        if (!require(doc, "version", schema).is_string()) fail(schema, "\"version\" must be a string");
        const auto& status = require(doc, "status", schema);
        if (status != "pass" && status != "fail" && status != "ok") fail(schema, "unknown status");
        if (!require(doc, "duration_ms", schema).is_number()) fail(schema, "\"duration_ms\" must be a number");
        require(doc, "result", schema);
    } else {
        throw std::invalid_argument("unknown schema " + std::string(schema));
    }
}

Json to_json(const ColoredPermutation& pi) {
    Json letters = Json::array();
    for (const auto& letter : pi.letters()) letters.push_back(letter_json(letter));
    Json doc{{"r", pi.r()}, {"n", pi.n()}, {"letters", std::move(letters)}};
    validate_json(doc, "permutation");
    return doc;
}

ColoredPermutation permutation_from_json(const Json& doc) {
    validate_json(doc, "permutation");
    ColoredWord letters;
    for (const auto& value : doc["letters"]) letters.push_back(letter_from(value));
    return ColoredPermutation(doc["r"].get<int>(), std::move(letters));
}

Json to_json(const ColoredPoset& poset) {
    Json elements = Json::array();
    for (const auto& letter : poset.nonzero_elements()) elements.push_back(letter_json(letter));
    Json covers = Json::array();
    for (const auto& [low, high] : poset.covers()) {
        if (low.is_zero() && high.is_zero()) continue;
        covers.push_back(Json::array({letter_json(low), letter_json(high)}));
    }
    Json doc{{"r", poset.r()}, {"n", poset.n()}, {"elements", std::move(elements)}, {"covers", std::move(covers)}};
    validate_json(doc, "poset");
    return doc;
}

ColoredPoset poset_from_json(const Json& doc) {
    validate_json(doc, "poset");
    std::vector<ColoredLetter> elements;
    for (const auto& value : doc["elements"]) elements.push_back(letter_from(value));
    std::vector<Relation> covers;
    for (const auto& pair : doc["covers"]) covers.emplace_back(letter_from(pair[0]), letter_from(pair[1]));
    return ColoredPoset::make(doc["r"].get<int>(), doc["n"].get<int>(), std::move(elements), std::move(covers));
}

Json to_json(const TruncatedSeries& series) {
    Json coeffs = Json::array();
    for (const auto& value : series.coefficients()) coeffs.push_back(to_string(value));
    Json doc{{"t_coeffs", std::move(coeffs)}};
    validate_json(doc, "series");
    return doc;
}

TruncatedSeries series_from_json(const Json& doc) {
    validate_json(doc, "series");
    std::vector<BigInt> coeffs;
    for (const auto& value : doc["t_coeffs"]) coeffs.emplace_back(value.get<std::string>());
    return TruncatedSeries(std::move(coeffs));
}

Json count_record(std::string op, Json params, const BigInt& count) {
    Json doc{{"op", std::move(op)}, {"params", std::move(params)}, {"count", to_string(count)}};
    validate_json(doc, "count");
    return doc;
}

Json to_json(const IdempotentTable& table) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < table.alpha.size(); ++i) {
        Json classes = Json::array();
        for (std::size_t d = 0; d < table.alpha[i].size(); ++d) {
            const auto& value = table.alpha[i][d];
            classes.push_back({{"des", d},
                               {"num", to_string(BigInt(value.get_num()))},
                               {"den", to_string(BigInt(value.get_den()))}});
        }
        rows.push_back({{"i", i}, {"by_des_class", std::move(classes)}});
    }
    Json doc{{"r", table.r},
             {"n", table.n},
             {"idempotents", std::move(rows)},
             {"common_denominator", to_string(table.common_denominator())}};
    validate_json(doc, "idempotents");
    return doc;
}

Json tensor_to_json(const StructureTensor& tensor) {
    Json doc = Json::array();
    for (const auto& row : tensor) {
        Json out_row = Json::array();
        for (const auto& cell : row) {
            Json out_cell = Json::array();
            for (const auto& value : cell) out_cell.push_back(to_string(value));
            out_row.push_back(std::move(out_cell));
        }
        doc.push_back(std::move(out_row));
    }
    validate_json(doc, "tensor");
    return doc;
}

StructureTensor tensor_from_json(const Json& doc) {
    validate_json(doc, "tensor");
    StructureTensor tensor;
    for (const auto& row : doc) {
        auto& out_row = tensor.emplace_back();
        for (const auto& cell : row) {
            auto& out_cell = out_row.emplace_back();
            for (const auto& value : cell) out_cell.emplace_back(value.get<std::string>());
        }
    }
    return tensor;
}

Json to_json(const SpanWitness& witness) {
    return {{"class", witness.class_id},
            {"first", to_string(witness.first)},
            {"second", to_string(witness.second)},
            {"first_coefficient", to_string(witness.first_coefficient)},
            {"second_coefficient", to_string(witness.second_coefficient)}};
}

}  // namespace coloreul
