// Copyright 2026 The plagdet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>
#include <utility>
#include <vector>

#include "plagdet/corpus/paraphraser.h"

namespace plagdet::corpus {
namespace {

struct Entry {
  const char* word;
  std::vector<const char*> alternatives;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> kEntries = {
    {"fast", {"quick", "rapid", "swift"}},
    {"big", {"large", "huge", "sizable"}},
    {"small", {"little", "tiny", "compact"}},
    {"begin", {"start", "commence", "initiate"}},
    {"end", {"finish", "conclude", "terminate"}},
    {"show", {"demonstrate", "display", "reveal"}},
    {"use", {"employ", "utilize", "apply"}},
    {"make", {"create", "produce", "construct"}},
    {"help", {"assist", "aid"}},
    {"need", {"require", "demand"}},
    {"get", {"obtain", "acquire", "receive"}},
    {"give", {"provide", "supply", "offer"}},
    {"find", {"discover", "locate", "identify"}},
    {"think", {"believe", "consider", "suppose"}},
    {"important", {"significant", "crucial", "essential"}},
    {"method", {"technique", "approach", "procedure"}},
    {"result", {"outcome", "finding", "consequence"}},
    {"problem", {"issue", "difficulty", "challenge"}},
    {"idea", {"notion", "concept", "thought"}},
    {"change", {"alter", "modify", "adjust"}},
    {"improve", {"enhance", "refine", "upgrade"}},
    {"increase", {"raise", "boost", "expand"}},
    {"decrease", {"reduce", "lower", "diminish"}},
    {"study", {"investigation", "inquiry", "analysis"}},
    {"test", {"trial", "examination", "check"}},
    {"goal", {"aim", "objective", "target"}},
    {"way", {"manner", "means", "fashion"}},
    {"part", {"portion", "component", "segment"}},
    {"whole", {"entire", "complete", "total"}},
    {"many", {"numerous", "several", "multiple"}},
    {"often", {"frequently", "regularly", "commonly"}},
    {"rarely", {"seldom", "infrequently"}},
    {"usually", {"typically", "generally", "normally"}},
    {"clear", {"evident", "obvious", "apparent"}},
    {"hard", {"difficult", "tough", "demanding"}},
    {"easy", {"effortless", "straightforward"}},
    {"new", {"novel", "fresh", "recent"}},
    {"old", {"former", "previous", "earlier"}},
    {"good", {"fine", "decent", "favorable"}},
    {"bad", {"inferior", "weak"}},
    {"strong", {"robust", "powerful", "sturdy"}},
    {"main", {"primary", "principal", "chief"}},
    {"key", {"central", "vital", "pivotal"}},
    {"basic", {"fundamental", "elementary", "core"}},
    {"common", {"widespread", "prevalent", "ordinary"}},
    {"rare", {"unusual", "uncommon", "scarce"}},
    {"exact", {"precise", "accurate", "correct"}},
    {"rough", {"approximate", "crude"}},
    {"quickly", {"rapidly", "swiftly", "promptly"}},
    {"slowly", {"gradually", "steadily"}},
    {"mostly", {"largely", "chiefly", "predominantly"}},
    {"nearly", {"almost", "practically", "virtually"}},
    {"completely", {"entirely", "fully", "totally"}},
    {"describe", {"depict", "portray", "outline"}},
    {"explain", {"clarify", "elucidate", "interpret"}},
    {"discuss", {"examine", "debate", "review"}},
    {"suggest", {"propose", "recommend", "advise"}},
    {"claim", {"assert", "contend", "maintain"}},
    {"argue", {"contend"}},
    {"allow", {"permit", "enable", "let"}},
    {"prevent", {"stop", "avert", "hinder"}},
    {"keep", {"retain", "preserve", "hold"}},
    {"choose", {"select", "pick", "opt"}},
    {"build", {"assemble", "erect"}},
    {"grow", {"develop", "expand", "mature"}},
    {"move", {"shift", "transfer", "relocate"}},
    {"try", {"attempt", "endeavor"}},
    {"want", {"desire", "wish"}},
    {"seem", {"appear", "look"}},
    {"feel", {"sense", "perceive"}},
    {"learn", {"acquire", "master", "grasp"}},
    {"teach", {"instruct", "educate", "train"}},
    {"answer", {"reply", "response", "respond"}},
    {"ask", {"inquire", "query", "request"}},
    {"tell", {"inform", "notify", "advise"}},
    {"buy", {"purchase", "acquire"}},
    {"sell", {"vend", "market"}},
    {"work", {"labor", "toil", "operate"}},
    {"job", {"task", "duty", "assignment"}},
    {"area", {"region", "zone", "sector"}},
    {"place", {"location", "site", "spot"}},
    {"house", {"home", "dwelling", "residence"}},
    {"city", {"town", "municipality", "metropolis"}},
    {"country", {"nation", "state", "land"}},
    {"world", {"globe", "earth"}},
    {"people", {"persons", "individuals", "folks"}},
    {"child", {"kid", "youngster", "youth"}},
    {"man", {"gentleman", "male", "fellow"}},
    {"woman", {"lady", "female"}},
    {"friend", {"companion", "ally", "comrade"}},
    {"group", {"team", "cluster", "collective"}},
    {"company", {"firm", "business", "enterprise"}},
    {"money", {"funds", "cash", "capital"}},
    {"price", {"charge", "fee"}},
    {"value", {"worth", "merit"}},
    {"amount", {"quantity", "sum", "volume"}},
    {"number", {"figure", "count", "numeral"}},
    {"size", {"dimension", "magnitude", "extent"}},
    {"level", {"degree", "grade", "tier"}},
    {"rate", {"pace", "speed", "tempo"}},
    {"time", {"period", "duration", "interval"}},
    {"moment", {"instant", "second"}},
    {"year", {"annum"}},
    {"day", {"date"}},
    {"question", {"query", "inquiry"}},
    {"reason", {"cause", "motive", "basis"}},
    {"purpose", {"intent", "function", "aim"}},
    {"effect", {"impact", "influence"}},
    {"role", {"function", "position"}},
    {"form", {"shape", "structure", "format"}},
    {"kind", {"type", "sort", "variety"}},
    {"fact", {"truth", "reality"}},
    {"point", {"detail", "aspect", "item"}},
    {"story", {"tale", "narrative", "account"}},
    {"word", {"term", "expression"}},
    {"book", {"volume", "publication", "text"}},
    {"paper", {"article", "document", "report"}},
    {"data", {"information", "records", "figures"}},
    {"model", {"framework", "scheme"}},
    {"system", {"mechanism", "structure", "arrangement"}},
    {"process", {"operation", "workflow", "routine"}},
    {"program", {"application", "software", "routine"}},
    {"tool", {"instrument", "utility", "device"}},
    {"machine", {"engine", "apparatus", "device"}},
    {"network", {"web", "grid", "mesh"}},
    {"rule", {"regulation", "principle", "guideline"}},
    {"law", {"statute", "decree", "act"}},
    {"plan", {"scheme", "strategy", "blueprint"}},
    {"design", {"layout", "pattern"}},
    {"risk", {"hazard", "danger", "threat"}},
    {"benefit", {"advantage", "gain", "merit"}},
    {"cost", {"expense", "outlay", "expenditure"}},
    {"power", {"strength", "force", "energy"}},
    {"control", {"command", "regulate", "govern"}},
    {"support", {"backing", "assistance", "endorsement"}},
    {"attack", {"assault", "strike", "offensive"}},
    {"defend", {"protect", "guard", "shield"}},
    {"win", {"triumph", "prevail"}},
    {"lose", {"misplace", "forfeit"}},
    {"fail", {"falter", "flounder", "collapse"}},
    {"succeed", {"prosper", "thrive", "flourish"}},
    {"happy", {"glad", "cheerful", "content"}},
    {"sad", {"unhappy", "sorrowful", "gloomy"}},
    {"angry", {"furious", "irate", "annoyed"}},
    {"calm", {"peaceful", "serene", "tranquil"}},
    {"quiet", {"silent", "hushed", "still"}},
    {"loud", {"noisy", "deafening"}},
    {"bright", {"brilliant", "luminous", "vivid"}},
    {"dark", {"dim", "murky", "shadowy"}},
    {"hot", {"warm", "heated", "scorching"}},
    {"cold", {"chilly", "cool", "frigid"}},
    {"wet", {"damp", "moist", "soaked"}},
    {"dry", {"arid", "parched"}},
    {"high", {"tall", "elevated", "lofty"}},
    {"low", {"short", "shallow"}},
    {"long", {"lengthy", "extended", "prolonged"}},
    {"wide", {"broad", "expansive", "spacious"}},
    {"narrow", {"slim", "thin", "tight"}},
    {"deep", {"profound", "intense"}},
    {"heavy", {"weighty", "hefty", "massive"}},
    {"light", {"lightweight", "airy"}},
    {"rich", {"wealthy", "affluent", "prosperous"}},
    {"poor", {"needy", "impoverished"}},
    {"safe", {"secure", "protected"}},
    {"dangerous", {"risky", "hazardous", "perilous"}},
    {"true", {"accurate", "genuine", "valid"}},
    {"false", {"incorrect", "untrue"}},
    {"right", {"proper", "appropriate", "suitable"}},
    {"wrong", {"mistaken", "erroneous"}},
    {"early", {"premature", "initial"}},
    {"late", {"delayed", "tardy", "overdue"}},
    {"final", {"last", "ultimate", "closing"}},
    {"first", {"initial", "opening", "earliest"}},
    {"next", {"following", "subsequent", "succeeding"}},
    {"similar", {"alike", "comparable", "analogous"}},
    {"different", {"distinct", "dissimilar", "diverse"}},
    {"same", {"identical", "equal", "equivalent"}},
    {"special", {"particular", "specific", "distinctive"}},
    {"general", {"broad", "overall", "universal"}},
    {"simple", {"plain", "uncomplicated"}},
    {"complex", {"complicated", "intricate", "involved"}},
    {"modern", {"contemporary", "current", "present"}},
    {"ancient", {"archaic", "antique", "primeval"}},
    {"famous", {"renowned", "celebrated", "noted"}},
    {"strange", {"odd", "peculiar", "curious"}},
    {"beautiful", {"lovely", "attractive", "gorgeous"}},
    {"ugly", {"unsightly", "hideous"}},
    {"smart", {"clever", "intelligent"}},
    {"stupid", {"foolish", "dumb", "silly"}},
    {"brave", {"courageous", "bold", "fearless"}},
    {"afraid", {"scared", "fearful", "frightened"}},
    {"careful", {"cautious", "attentive", "mindful"}},
    {"lazy", {"idle", "sluggish"}},
    {"busy", {"occupied", "engaged", "active"}},
    {"free", {"unrestricted", "gratis"}},
    {"full", {"filled", "packed", "crowded"}},
    {"empty", {"vacant", "bare", "hollow"}},
    {"open", {"unlocked", "accessible"}},
    {"close", {"shut", "seal"}},
    {"near", {"adjacent", "nearby"}},
    {"far", {"distant", "remote"}},
    {"above", {"over", "atop"}},
    {"below", {"under", "beneath", "underneath"}},
    {"inside", {"within", "indoors"}},
    {"outside", {"outdoors", "exterior"}},
    {"before", {"prior", "previously", "earlier"}},
    {"after", {"afterward", "subsequently", "later"}},
    {"during", {"throughout", "amid"}},
    {"however", {"nevertheless", "nonetheless", "yet"}},
    {"therefore", {"thus", "hence", "consequently"}},
    {"because", {"since", "as"}},
    {"although", {"though", "while", "whereas"}},
    {"again", {"anew", "afresh"}},
  };
  return kEntries;
}

}  // namespace

const SynonymTable& default_synonym_table() {
  static const SynonymTable kTable = [] {
    SynonymTable t;
    for (const auto& e : entries()) {
      t.emplace(e.word, std::vector<std::string>(e.alternatives.begin(), e.alternatives.end()));
    }
    return t;
  }();
  return kTable;
}

const std::vector<std::string>& synonym_table_words() {
  static const std::vector<std::string> kWords = [] {
    std::vector<std::string> w;
    for (const auto& e : entries()) w.emplace_back(e.word);
    return w;
  }();
  return kWords;
}

const SynonymTable& function_word_swaps() {
  static const SynonymTable kSwaps = {
      {"this", {"that"}},
      {"that", {"this"}},
      {"also", {"additionally"}},
      {"additionally", {"also"}},
  };
  return kSwaps;
}

}  // namespace plagdet::corpus
