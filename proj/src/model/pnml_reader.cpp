#include <istream>
#include <set>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "proxyalign/error.hpp"
#include "proxyalign/petri_net.hpp"

namespace proxyalign::model {
namespace pt = boost::property_tree;

namespace {

struct RawArc {
  std::string id, source, target;
};

std::string text_of(const pt::ptree& node, const std::string& child) {
  auto text = node.get_optional<std::string>(child + ".text");
  if (!text) return {};
  std::string s = *text;
  const auto first = s.find_first_not_of(" \t\r\n");
  const auto last = s.find_last_not_of(" \t\r\n");
  return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
}

bool prom_invisible(const pt::ptree& node) {
  for (const auto& [name, child] : node) {
    if (name == "toolspecific" && child.get<std::string>("<xmlattr>.activity", "") == "$invisible$") {
      return true;
    }
  }
  return false;
}

void collect(const pt::ptree& node, const PnmlOptions& options, PetriNet& net,
             std::vector<std::uint32_t>& initial, std::vector<RawArc>& arcs) {
  for (const auto& [name, child] : node) {
    if (name == "page") {
      collect(child, options, net, initial, arcs);
    } else if (name == "place") {
      const auto id = child.get<std::string>("<xmlattr>.id", "");
      if (id.empty()) throw ParseError("PNML place without id");
      std::uint32_t tokens = 0;
      if (const auto text = text_of(child, "initialMarking"); !text.empty()) {
        try {
          tokens = static_cast<std::uint32_t>(std::stoul(text));
        } catch (const std::exception&) {
          throw ParseError("place '" + id + "' has invalid initial marking '" + text + "'");
        }
      }
      net.places.push_back({id});
      initial.push_back(tokens);
    } else if (name == "transition") {
      Transition t;
      t.id = child.get<std::string>("<xmlattr>.id", "");
      if (t.id.empty()) throw ParseError("PNML transition without id");
      const auto label = text_of(child, "name");
      if (!label.empty() && label != options.silent_label && !prom_invisible(child)) {
        t.label = Activity::intern(label);
      }
      net.transitions.push_back(std::move(t));
    } else if (name == "arc") {
      RawArc arc{child.get<std::string>("<xmlattr>.id", ""),
                 child.get<std::string>("<xmlattr>.source", ""),
                 child.get<std::string>("<xmlattr>.target", "")};
      if (const auto w = text_of(child, "inscription"); !w.empty() && w != "1") {
        throw ModelError("arc '" + arc.id + "' has weight " + w + "; only unit weights are supported");
      }
      arcs.push_back(std::move(arc));
    }
  }
}

}  // namespace

PetriNet parse_pnml(std::istream& in, const PnmlOptions& options) {
  pt::ptree doc;
  try {
    pt::read_xml(in, doc);
  } catch (const pt::xml_parser_error& e) {
    throw ParseError("malformed PNML: " + e.message(), e.line());
  }
  const pt::ptree* net_node = nullptr;
  if (auto root = doc.get_child_optional("pnml")) {
    net_node = root->get_child_optional("net").get_ptr();
  }
  if (net_node == nullptr) throw ParseError("PNML document has no <pnml><net> element");

  PetriNet net;
  std::vector<RawArc> arcs;
  collect(*net_node, options, net, net.initial_marking, arcs);

  auto transition_index = [&](const std::string& id) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < net.transitions.size(); ++i) {
      if (net.transitions[i].id == id) return i;
    }
    return std::nullopt;
  };
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& arc : arcs) {
    if (!seen.emplace(arc.source, arc.target).second) {
      throw ModelError("arc '" + arc.id + "' duplicates an existing arc");
    }
    if (auto p = net.place_index(arc.source)) {
      auto t = transition_index(arc.target);
      if (!t) throw ModelError("arc '" + arc.id + "' has dangling target '" + arc.target + "'");
      net.transitions[*t].inputs.push_back(*p);
    } else if (auto t = transition_index(arc.source)) {
      auto p2 = net.place_index(arc.target);
      if (!p2) throw ModelError("arc '" + arc.id + "' has dangling target '" + arc.target + "'");
      net.transitions[*t].outputs.push_back(*p2);
    } else {
      throw ModelError("arc '" + arc.id + "' has dangling source '" + arc.source + "'");
    }
  }
  return net;
}

}  // namespace proxyalign::model
