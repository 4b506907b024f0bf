#pragma once

// Loader for the transcribed CP^d tables under tests/golden/.

#include <qstokes/exact.hpp>

#include <json.hpp>

#include <fstream>
#include <map>
#include <string>

namespace golden {

struct Table {
    int k = 0;
    std::map<std::string, qstokes::IMat> mats;
    std::string word, word_prime;

    bool has(const std::string& name) const { return mats.count(name) != 0; }
    const qstokes::IMat& at(const std::string& name) const { return mats.at(name); }
};

inline Table load(int k) {
    const std::string path = std::string(QSTOKES_GOLDEN_DIR) + "/cp" + std::to_string(k - 1) + ".json";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing golden file " + path);
    nlohmann::json j;
    in >> j;
    Table t;
    t.k = j.at("k").get<int>();
    for (auto& [key, val] : j.items()) {
        if (!val.is_array()) continue;
        const auto rows = val.get<std::vector<std::vector<long>>>();
        qstokes::IMat m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t jj = 0; jj < rows[i].size(); ++jj) m(i, jj) = qstokes::Int(rows[i][jj]);
        t.mats.emplace(key, std::move(m));
    }
    if (j.contains("word")) t.word = j.at("word").get<std::string>();
    if (j.contains("word_prime")) t.word_prime = j.at("word_prime").get<std::string>();
    return t;
}

}  // namespace golden
