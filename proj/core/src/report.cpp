#include "qbound/report.hpp"

#include <json.hpp>

#include "qbound/errors.hpp"

namespace qbound {

using json = nlohmann::ordered_json;

std::string report_to_json(const MeasureReport& report) {
    json measures = json::object();
    for (const auto& [name, value] : report.measures)
        measures[name] = ratlp::to_string(value);
    json argmax = json::object();
    for (const auto& [name, word] : report.argmax) argmax[name] = word;
    json doc{{"function", report.function_id},
             {"n", report.n},
             {"measures", measures},
             {"argmax", argmax}};
    return doc.dump(2) + "\n";
}

MeasureReport report_from_json(std::string_view text) {
    json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object())
        throw SyntaxError("report is not a JSON object");
    MeasureReport report;
    report.function_id = doc.at("function").get<std::string>();
    report.n = doc.at("n").get<int>();
    for (const auto& [name, value] : doc.at("measures").items())
        report.measures.emplace_back(name, ratlp::parse_rational(value.get<std::string>()));
    for (const auto& [name, word] : doc.at("argmax").items())
        report.argmax.emplace_back(name, word.get<std::string>());
    return report;
}

std::string report_to_csv(const MeasureReport& report) {
    std::string out = "function,n,measure,value,argmax\n";
    for (const auto& [name, value] : report.measures) {
        std::string word;
        for (const auto& [aname, aword] : report.argmax)
            if (aname == name) word = aword;
        out += report.function_id + "," + std::to_string(report.n) + "," + name + "," +
               ratlp::to_string(value) + "," + word + "\n";
    }
    return out;
}

}  // namespace qbound
