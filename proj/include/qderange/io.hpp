#pragma once

#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qderange/coeff_seq.hpp"

namespace qderange {

enum class OutputFormat { Text, Json, Csv };

inline std::string_view to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Text: return "text";
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
    }
    throw std::logic_error("to_string(OutputFormat): bad enum value");
}

inline OutputFormat format_from_string(std::string_view s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown format '" + std::string(s) + "' (want text|json|csv)");
}

// Smallest index attaining the maximum coefficient; 0 for the empty sequence.
inline long argmax_index(const CoeffSeq& seq) {
    long best = 0;
    for (long k = 1; k <= seq.degree(); ++k)
        if (best == 0 || seq.at(best) < seq.at(k)) best = k;
    return best;
}

// Coefficients as decimal strings so that consumers without big integers can
// still read the document losslessly.
inline std::string render_json(const CoeffSeq& seq, Method method) {
    nlohmann::json doc;
    doc["n"] = seq.n;
    doc["degree"] = seq.degree();
    doc["method"] = std::string(to_string(method));
    auto coefficients = nlohmann::json::array();
    for (const auto& c : seq.coeffs) coefficients.push_back(c.str());
    doc["coefficients"] = std::move(coefficients);
    return doc.dump(2) + "\n";
}

// Exact inverse of render_json for well-formed documents.
inline CoeffSeq coeff_seq_from_json(const std::string& text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    CoeffSeq seq;
    seq.n = doc.at("n").get<int>();
    for (const auto& item : doc.at("coefficients"))
        seq.coeffs.emplace_back(item.get<std::string>());
    if (doc.at("degree").get<long>() != seq.degree())
        throw std::invalid_argument("coefficient document: degree disagrees with the array length");
    return seq;
}

inline std::string render_csv(const CoeffSeq& seq) {
    std::string out = "index,coefficient\n";
    for (long k = 1; k <= seq.degree(); ++k)
        out += std::to_string(k) + "," + seq.at(k).str() + "\n";
    return out;
}

inline std::string render_text(const CoeffSeq& seq) {
    std::ostringstream out;
    if (seq.degree() == 0) {
        out << "d_" << seq.n << "(q) = 0  (no terms; D_" << seq.n << " = "
            << derangement_count(seq.n) << ")\n";
        return out.str();
    }
    const long peak = argmax_index(seq);
    out << "d_" << seq.n << "(q): degree " << seq.degree() << ", D_" << seq.n << " = "
        << seq.eval_at_one() << ", peak A(" << peak << ") = " << seq.at(peak) << "\n";
    const int index_width = static_cast<int>(std::to_string(seq.degree()).size());
    const int coeff_width = static_cast<int>(seq.at(peak).str().size());
    for (long k = 1; k <= seq.degree(); ++k)
        out << std::setw(index_width) << k << " → " << std::setw(coeff_width) << seq.at(k).str()
            << "\n";
    return out.str();
}

inline std::string render(const CoeffSeq& seq, Method method, OutputFormat format) {
    switch (format) {
        case OutputFormat::Text: return render_text(seq);
        case OutputFormat::Json: return render_json(seq, method);
        case OutputFormat::Csv: return render_csv(seq);
    }
    throw std::logic_error("render: bad format enum");
}

}  // namespace qderange
