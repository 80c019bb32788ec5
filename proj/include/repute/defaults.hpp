#pragma once
// Built-in lexicon and dimension cue lists. The same content ships as
// editable files under data/; a test keeps the two in sync. The CLI falls
// back to these when a config names no lexicon files.

#include <string_view>

#include "repute/classify.hpp"
#include "repute/sentiment.hpp"

namespace repute::defaults {

inline constexpr std::string_view kTermsTsv =
    "# sentiment terms: term<TAB>strength, strength in {-5..-2} or {2..5}\n"
    "# a single trailing '*' makes the entry a prefix wildcard\n"
    "good\t3\n"
    "great\t4\n"
    "excellent\t5\n"
    "amazing\t5\n"
    "awesome\t4\n"
    "love\t4\n"
    "like\t2\n"
    "nice\t3\n"
    "solid\t3\n"
    "strong\t3\n"
    "win\t3\n"
    "wins\t3\n"
    "impressive\t4\n"
    "innovative\t3\n"
    "reliable\t3\n"
    "profitable\t3\n"
    "trust\t3\n"
    "proud\t3\n"
    "happy\t3\n"
    "brilliant\t4\n"
    "outstanding\t5\n"
    "delight*\t4\n"
    "success*\t3\n"
    "improve*\t2\n"
    "gain*\t2\n"
    "bad\t-3\n"
    "terrible\t-4\n"
    "awful\t-4\n"
    "horrible\t-5\n"
    "disaster\t-5\n"
    "scandal\t-4\n"
    "fraud\t-5\n"
    "crisis\t-3\n"
    "toxic\t-4\n"
    "weak\t-2\n"
    "poor\t-3\n"
    "ugly\t-3\n"
    "mess\t-3\n"
    "angry\t-3\n"
    "sad\t-2\n"
    "worried\t-2\n"
    "mislead*\t-4\n"
    "fail*\t-3\n"
    "disappoint*\t-3\n"
    "corrupt*\t-4\n"
    "outrag*\t-4\n";

inline constexpr std::string_view kBoostersTsv =
    "# boosters: term<TAB>delta, delta in {-2,-1,1,2}\n"
    "very\t1\n"
    "really\t1\n"
    "so\t1\n"
    "extremely\t2\n"
    "absolutely\t2\n"
    "incredibly\t2\n"
    "somewhat\t-1\n"
    "slightly\t-1\n"
    "barely\t-1\n";

inline constexpr std::string_view kNegatorsTsv =
    "# negators: one term per line\n"
    "not\n"
    "no\n"
    "never\n"
    "hardly\n"
    "cannot\n"
    "don't\n"
    "doesn't\n"
    "didn't\n"
    "isn't\n"
    "wasn't\n"
    "won't\n";

inline constexpr std::string_view kEmoticonsTsv =
    "# emoticons: literal<TAB>strength\n"
    ":)\t2\n"
    ":-)\t3\n"
    ":D\t4\n"
    ";)\t2\n"
    "<3\t3\n"
    ":(\t-2\n"
    ":-(\t-3\n"
    ":'(\t-4\n"
    ":/\t-2\n";

inline constexpr std::string_view kDimensionsTsv =
    "# dimension cue lists: dimension<TAB>cue phrase\n"
    "emotional_appeal\tadmire\n"
    "emotional_appeal\tadmired\n"
    "emotional_appeal\tbeloved\n"
    "emotional_appeal\tinspiring\n"
    "emotional_appeal\ttrustworthy\n"
    "emotional_appeal\tgoodwill\n"
    "emotional_appeal\tfeel good\n"
    "products_services\tproduct\n"
    "products_services\tproducts\n"
    "products_services\tservice\n"
    "products_services\tservices\n"
    "products_services\tquality\n"
    "products_services\tlaunch\n"
    "products_services\tlaunched\n"
    "products_services\trecall\n"
    "products_services\tinnovation\n"
    "products_services\tdevice\n"
    "products_services\tdevices\n"
    "vision_leadership\tvision\n"
    "vision_leadership\tstrategy\n"
    "vision_leadership\tstrategic\n"
    "vision_leadership\tleadership\n"
    "vision_leadership\tmission\n"
    "vision_leadership\troadmap\n"
    "vision_leadership\tlong term plan\n"
    "workplace_environment\tworkplace\n"
    "workplace_environment\temployees\n"
    "workplace_environment\tstaff\n"
    "workplace_environment\tculture\n"
    "workplace_environment\thiring\n"
    "workplace_environment\tlayoffs\n"
    "workplace_environment\tunion\n"
    "workplace_environment\twork environment\n"
    "social_environmental_responsibility\tenvironment\n"
    "social_environmental_responsibility\tenvironmental\n"
    "social_environmental_responsibility\tsustainability\n"
    "social_environmental_responsibility\temissions\n"
    "social_environmental_responsibility\tcharity\n"
    "social_environmental_responsibility\tcommunity\n"
    "social_environmental_responsibility\tclimate\n"
    "social_environmental_responsibility\tdonation\n"
    "financial_performance\tearnings\n"
    "financial_performance\trevenue\n"
    "financial_performance\tprofit\n"
    "financial_performance\tprofits\n"
    "financial_performance\tdividend\n"
    "financial_performance\tstock\n"
    "financial_performance\tshares\n"
    "financial_performance\tquarterly\n"
    "financial_performance\tgrowth\n"
    "financial_performance\tforecast\n"
    "personality\tpersonality\n"
    "personality\tcharisma\n"
    "personality\thumble\n"
    "personality\tarrogant\n"
    "personality\ttemperament\n"
    "personality\tcharming\n"
    "authority\tauthority\n"
    "authority\tdecisive\n"
    "authority\tcommand\n"
    "authority\tinfluence\n"
    "authority\texpertise\n"
    "authority\tcredibility\n"
    "authenticity\tauthentic\n"
    "authenticity\tauthenticity\n"
    "authenticity\tgenuine\n"
    "authenticity\ttransparent\n"
    "authenticity\thonest\n"
    "authenticity\tsincerity\n";

inline SentimentLexicon lexicon() {
  return load_lexicon_strings(std::string(kTermsTsv), std::string(kBoostersTsv),
                              std::string(kNegatorsTsv), std::string(kEmoticonsTsv));
}

inline DimensionLexicon dimensions() {
  return load_dimension_lexicon_string(std::string(kDimensionsTsv));
}

}  // namespace repute::defaults
