#include "univg/verify.hpp"

#include <algorithm>

#include <json.hpp>

#include "univg/graph6.hpp"

namespace univg {

bool embedding_valid(const Graph& pattern, const Graph& target, const std::vector<int>& map)
{
    int np = pattern.order();
    if (static_cast<int>(map.size()) != np) return false;
    for (int v = 0; v < np; ++v) {
        if (map[v] < 0 || map[v] >= target.order()) return false;
        for (int u = 0; u < v; ++u) {
            if (map[u] == map[v]) return false;
            bool pe = pattern.row(u) >> v & 1;
            bool te = target.row(map[u]) >> map[v] & 1;
            if (pe != te) return false;
        }
    }
    return true;
}

Certificate verify_universal(const Graph& g, const GraphFamily& family,
                             const std::string& family_desc)
{
    Certificate cert;
    cert.graph6 = encode_graph6(g);
    cert.family = family_desc;
    cert.valid = true;

    for (const Graph& member : family) {
        MemberCheck mc;
        mc.member_graph6 = encode_graph6(member);
        if (auto emb = naive_find_embedding(member, g)) {
            mc.witness = emb->map;
            mc.contained = embedding_valid(member, g, mc.witness);
            if (!mc.contained) mc.witness.clear();  // witness replay failed: do not vouch
        }
        if (!mc.contained) cert.valid = false;
        cert.members.push_back(std::move(mc));
    }
    return cert;
}

CrossCheckResult cross_check(const GraphFamily& family, const std::vector<Graph>& candidates)
{
    CrossCheckResult res;
    for (std::size_t mi = 0; mi < family.size(); ++mi) {
        for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
            ++res.pairs;
            bool a = induced_subgraph_iso(family[mi], candidates[ci]);
            bool b = naive_induced_iso(family[mi], candidates[ci]);
            if (a != b) res.disagreements.push_back({mi, ci, a});
        }
    }
    return res;
}

std::string certificate_to_json(const Certificate& c)
{
    nlohmann::json j;
    j["graph6"] = c.graph6;
    j["family"] = c.family;
    j["valid"] = c.valid;
    j["members"] = nlohmann::json::array();
    for (const MemberCheck& mc : c.members) {
        nlohmann::json m;
        m["graph6"] = mc.member_graph6;
        m["contained"] = mc.contained;
        m["witness"] = mc.witness;
        j["members"].push_back(std::move(m));
    }
    return j.dump(2);
}

Certificate certificate_from_json(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    Certificate c;
    c.graph6 = j.at("graph6").get<std::string>();
    c.family = j.at("family").get<std::string>();
    c.valid = j.at("valid").get<bool>();
    for (const auto& m : j.at("members")) {
        MemberCheck mc;
        mc.member_graph6 = m.at("graph6").get<std::string>();
        mc.contained = m.at("contained").get<bool>();
        mc.witness = m.at("witness").get<std::vector<int>>();
        c.members.push_back(std::move(mc));
    }
    return c;
}

std::string certificate_to_text(const Certificate& c)
{
    std::size_t width = 6;
    for (const MemberCheck& mc : c.members) width = std::max(width, mc.member_graph6.size());

    std::string out = "graph   " + c.graph6 + "\n";
    if (!c.family.empty()) out += "family  " + c.family + "\n";
    out += "result  " + std::string(c.valid ? "VALID" : "INVALID") + "\n\n";
    for (const MemberCheck& mc : c.members) {
        std::string line = mc.member_graph6;
        line.resize(width, ' ');
        line += mc.contained ? "  ok      " : "  MISSING ";
        if (mc.contained) {
            for (std::size_t i = 0; i < mc.witness.size(); ++i) {
                if (i) line += ' ';
                line += std::to_string(i) + "->" + std::to_string(mc.witness[i]);
            }
        }
        out += line + "\n";
    }
    std::size_t ok = 0;
    for (const MemberCheck& mc : c.members) ok += mc.contained;
    out += "\n" + std::to_string(ok) + "/" + std::to_string(c.members.size()) + " members contained\n";
    return out;
}

}  // namespace univg
