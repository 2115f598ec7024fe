#include <uivd/error.hpp>
#include <uivd/serialize.hpp>

#include <nlohmann/json.hpp>

#include <sstream>

namespace uivd {

using Json = nlohmann::ordered_json;

namespace
{
    Json ids(const VertexList& vs)
    {
        Json a = Json::array();
        for (VertexId v : vs)
            a.push_back(index(v));
        return a;
    }

    VertexList ids_from(const Json& a)
    {
        VertexList vs;
        for (const auto& e : a)
            vs.push_back(vertex(e.get<std::size_t>()));
        return vs;
    }

    Json fis_json(const ForbiddenSubgraph& f)
    {
        return Json{{"kind", std::string(to_string(f.kind))}, {"vertices", ids(f.vertices)}};
    }

    Json model_json(const UnitIntervalModel& m)
    {
        Json a = Json::array();
        for (const auto& e : m.entries())
            a.push_back(Json{{"vertex", index(e.vertex)},
                             {"lp", e.interval.left.to_string()},
                             {"rp", e.interval.right.to_string()}});
        return a;
    }

    Json parse(const std::string& text)
    {
        try {
            return Json::parse(text);
        } catch (const Json::exception& e) {
            throw DomainError(std::string("malformed JSON: ") + e.what());
        }
    }

    /// Runs a reader, reporting missing keys and wrong types as DomainError.
    template <class F>
    auto reading(F f)
    {
        try {
            return f();
        } catch (const Json::exception& e) {
            throw DomainError(std::string("malformed JSON: ") + e.what());
        }
    }

    const char* pattern_name(PairPattern p)
    {
        switch (p) {
        case PairPattern::Both: return "xy";
        case PairPattern::OnlyFirst: return "x-not-y";
        case PairPattern::OnlySecond: return "not-x-y";
        case PairPattern::Neither: return "neither";
        }
        return "?";
    }
}

std::string to_json(const ForbiddenSubgraph& f)
{
    return fis_json(f).dump();
}

ForbiddenSubgraph fis_from_json(const std::string& text)
{
    return reading([&] {
        Json j = parse(text);
        ForbiddenSubgraph f;
        std::string kind = j.at("kind").get<std::string>();
        bool known = false;
        for (FisKind k : {FisKind::Claw, FisKind::Net, FisKind::Tent, FisKind::Hole})
            if (to_string(k) == kind) {
                f.kind = k;
                known = true;
            }
        if (! known)
            throw DomainError("unknown obstruction kind '" + kind + "'");
        f.vertices = ids_from(j.at("vertices"));
        return f;
    });
}

std::string to_json(const UnitIntervalModel& m)
{
    return model_json(m).dump();
}

UnitIntervalModel model_from_json(const std::string& text)
{
    return reading([&] {
        std::vector<UnitIntervalModel::Entry> entries;
        for (const auto& e : parse(text))
            entries.push_back({vertex(e.at("vertex").get<std::size_t>()),
                               Interval{Rational::parse(e.at("lp").get<std::string>()),
                                        Rational::parse(e.at("rp").get<std::string>())}});
        return UnitIntervalModel(std::move(entries));
    });
}

std::string to_json(const UnitIntervalCertificate& c)
{
    return Json{{"unit_interval", true}, {"ordering", ids(c.ordering.order)}, {"model", model_json(c.model)}}.dump();
}

std::string to_json(const Modulator& m)
{
    Json provenance = Json::array();
    for (VertexId v : m.members()) {
        auto o = m.origin(v);
        Json p{{"vertex", index(v)}, {"phase", o.phase1() ? 1 : 2}};
        if (o.phase1())
            p["obstruction"] = *o.obstruction;
        provenance.push_back(std::move(p));
    }
    Json obstructions = Json::array();
    for (const auto& f : m.obstructions())
        obstructions.push_back(fis_json(f));
    return Json{{"members", ids(m.members())}, {"provenance", provenance}, {"obstructions", obstructions}}.dump();
}

std::string to_jsonl(const ReductionTrace& t)
{
    std::string out;
    for (const auto& st : t.steps) {
        Json j{{"rule", st.rule}, {"vertices", ids(st.vertices)}, {"k_after", st.k_after}};
        if (st.rule == 3) {
            j["left"] = ids(st.left_side);
            j["right"] = ids(st.right_side);
        }
        out += j.dump();
        out += '\n';
    }
    return out;
}

ReductionTrace trace_from_jsonl(const std::string& text)
{
    return reading([&] {
        ReductionTrace t;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            Json j = parse(line);
            TraceStep st;
            st.rule = j.at("rule").get<int>();
            st.vertices = ids_from(j.at("vertices"));
            st.k_after = j.at("k_after").get<int>();
            if (j.contains("left"))
                st.left_side = ids_from(j["left"]);
            if (j.contains("right"))
                st.right_side = ids_from(j["right"]);
            t.steps.push_back(std::move(st));
        }
        return t;
    });
}

std::string to_json(const PickReport& r)
{
    Json k0 = Json::array();
    for (std::size_t i = 0; i < r.k0.size(); ++i)
        k0.push_back(Json{{"block", i}, {"vertices", ids(r.k0[i])}});
    Json k1 = Json::array();
    for (const auto& [key, vs] : r.k1) {
        auto [i, x, y, p] = key;
        k1.push_back(Json{{"block", i}, {"x", index(x)}, {"y", index(y)}, {"pattern", pattern_name(p)},
                          {"vertices", ids(vs)}});
    }
    Json k1x = Json::array();
    for (const auto& [key, vs] : r.k1x) {
        auto [i, x] = key;
        k1x.push_back(Json{{"block", i}, {"x", index(x)}, {"vertices", ids(vs)}});
    }
    auto keyed = [](const std::map<std::tuple<std::size_t, VertexId, VertexId>, VertexList>& cat) {
        Json a = Json::array();
        for (const auto& [key, vs] : cat) {
            auto [i, x, y] = key;
            a.push_back(Json{{"block", i}, {"x", index(x)}, {"y", index(y)}, {"vertices", ids(vs)}});
        }
        return a;
    };
    return Json{{"k0", k0},           {"k1", k1},     {"k1x", k1x},    {"k2", keyed(r.k2)},
                {"k3", keyed(r.k3)}, {"k4", keyed(r.k4)}, {"v0", ids(r.v0)}, {"all", ids(r.all)}}
        .dump();
}

std::string to_json(const Solution& s)
{
    return Json{{"deleted", ids(s.deleted)}}.dump();
}

} // namespace uivd
