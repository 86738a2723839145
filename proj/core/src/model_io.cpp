#include "agtd/model_io.hpp"

#include <fstream>

#include <json.hpp>

#include "agtd/errors.hpp"

namespace agtd {
namespace {

using nlohmann::json;

constexpr int kModelVersion = 1;

const char* kind_name(AttrKind k) {
    switch (k) {
        case AttrKind::Numeric: return "numeric";
        case AttrKind::Nominal: return "nominal";
        case AttrKind::Binary: return "binary";
    }
    return "numeric";
}

AttrKind kind_from(const std::string& s) {
    if (s == "numeric") return AttrKind::Numeric;
    if (s == "nominal") return AttrKind::Nominal;
    if (s == "binary") return AttrKind::Binary;
    throw ParseError("model file: unknown attribute kind \"" + s + "\"");
}

json schema_to_json(const FeatureSchema& schema) {
    json attrs = json::array();
    for (const auto& a : schema.attributes) {
        json ja;
        ja["name"] = a.name;
        ja["kind"] = kind_name(a.kind);
        if (a.kind == AttrKind::Nominal) ja["levels"] = a.levels;
        attrs.push_back(std::move(ja));
    }
    return json{{"attributes", std::move(attrs)}, {"classes", json::array({"AGT", "HGT"})}};
}

FeatureSchema schema_from_json(const json& j) {
    FeatureSchema schema;
    for (const auto& ja : j.at("attributes")) {
        Attribute a;
        a.name = ja.at("name").get<std::string>();
        a.kind = kind_from(ja.at("kind").get<std::string>());
        if (a.kind == AttrKind::Nominal)
            a.levels = ja.at("levels").get<std::vector<std::string>>();
        schema.attributes.push_back(std::move(a));
    }
    schema.validate();
    return schema;
}

}  // namespace

void save_model(std::ostream& out, const TrainedModel& model) {
    json j;
    j["format"] = "agtd-model";
    j["version"] = kModelVersion;
    j["kind"] = model.kind == LearnerKind::NaiveBayes ? "nb" : "rf";
    j["seed"] = model.seed;
    j["schema"] = schema_to_json(model.schema);

    if (model.kind == LearnerKind::NaiveBayes) {
        const auto& nb = std::get<NbModel>(model.params);
        json attrs = json::array();
        for (std::size_t i = 0; i < nb.attrs.size(); ++i) {
            const auto& p = nb.attrs[i];
            if (model.schema.attributes[i].kind == AttrKind::Numeric)
                attrs.push_back(json{{"mean", p.mean}, {"variance", p.variance}});
            else
                attrs.push_back(json{{"level_prob", p.level_prob}});
        }
        j["nb"] = json{{"prior", nb.prior}, {"attrs", std::move(attrs)}};
    } else {
        const auto& rf = std::get<RfModel>(model.params);
        json trees = json::array();
        for (const auto& tree : rf.trees) {
            json nodes = json::array();
            for (const auto& n : tree.nodes)
                nodes.push_back(json::array(
                    {n.attr, n.split, n.left, n.right, n.count_agt, n.count_hgt}));
            trees.push_back(std::move(nodes));
        }
        j["rf"] = json{{"config",
                        json{{"n_trees", rf.config.n_trees},
                             {"max_features", rf.config.max_features},
                             {"seed", rf.config.seed},
                             {"bootstrap", rf.config.bootstrap}}},
                       {"trees", std::move(trees)}};
    }
    out << j.dump() << "\n";
}

void save_model_file(const std::string& path, const TrainedModel& model) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write model file: " + path);
    save_model(out, model);
}

TrainedModel load_model(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("model file: ") + e.what());
    }
    if (j.value("format", "") != "agtd-model")
        throw ParseError("model file: not an agtd-model file");
    if (j.value("version", -1) != kModelVersion)
        throw ParseError("model file: unsupported version");

    TrainedModel model;
    model.schema = schema_from_json(j.at("schema"));
    model.seed = j.at("seed").get<std::uint64_t>();
    std::string kind = j.at("kind").get<std::string>();

    if (kind == "nb") {
        model.kind = LearnerKind::NaiveBayes;
        NbModel nb;
        const json& jn = j.at("nb");
        nb.prior = jn.at("prior").get<std::vector<double>>();
        for (std::size_t i = 0; i < model.schema.size(); ++i) {
            const json& ja = jn.at("attrs").at(i);
            NbAttrParams p;
            if (model.schema.attributes[i].kind == AttrKind::Numeric) {
                p.mean = ja.at("mean").get<std::vector<double>>();
                p.variance = ja.at("variance").get<std::vector<double>>();
            } else {
                p.level_prob = ja.at("level_prob").get<std::vector<std::vector<double>>>();
            }
            nb.attrs.push_back(std::move(p));
        }
        model.params = std::move(nb);
    } else if (kind == "rf") {
        model.kind = LearnerKind::RandomForest;
        RfModel rf;
        const json& jr = j.at("rf");
        rf.config.n_trees = jr.at("config").at("n_trees").get<std::size_t>();
        rf.config.max_features = jr.at("config").at("max_features").get<std::size_t>();
        rf.config.seed = jr.at("config").at("seed").get<std::uint64_t>();
        rf.config.bootstrap = jr.at("config").at("bootstrap").get<bool>();
        for (const auto& jt : jr.at("trees")) {
            Tree tree;
            for (const auto& jn : jt) {
                TreeNode n;
                n.attr = jn.at(0).get<std::int32_t>();
                n.split = jn.at(1).get<double>();
                n.left = jn.at(2).get<std::int32_t>();
                n.right = jn.at(3).get<std::int32_t>();
                n.count_agt = jn.at(4).get<std::uint32_t>();
                n.count_hgt = jn.at(5).get<std::uint32_t>();
                tree.nodes.push_back(n);
            }
            rf.trees.push_back(std::move(tree));
        }
        model.params = std::move(rf);
    } else {
        throw ParseError("model file: unknown learner kind \"" + kind + "\"");
    }
    return model;
}

TrainedModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read model file: " + path);
    return load_model(in);
}

}  // namespace agtd
