#pragma once

// Closed-class word lists and a small open-class lexicon for the reference
// English tagger and lemmatizer.

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "espace/text.hpp"

namespace espace::nlp::english {

using WordSet = std::unordered_set<std::string>;
using WordMap = std::unordered_map<std::string, std::string>;

inline WordSet make_set(std::string_view words) {
  WordSet out;
  for (auto& w : text::split_words(words)) out.insert(std::move(w));
  return out;
}

// "a:b c:d" -> {a: b, c: d}
inline WordMap make_map(std::string_view pairs) {
  WordMap out;
  for (const auto& p : text::split_words(pairs)) {
    auto colon = p.find(':');
    out.emplace(p.substr(0, colon), p.substr(colon + 1));
  }
  return out;
}

inline const WordSet& determiners() {
  static const WordSet s = make_set(
      "the a an this that these those each every some any no another all both either neither "
      "whatever whichever enough");
  return s;
}

inline const WordSet& possessive_pronouns() {
  static const WordSet s = make_set("my your his her its our their whose");
  return s;
}

inline const WordSet& pronouns() {
  static const WordSet s = make_set(
      "i me you he him she it we us they them myself yourself himself herself itself ourselves "
      "yourselves themselves something anything nothing everything someone anyone everyone "
      "nobody somebody everybody none mine yours hers ours theirs");
  return s;
}

inline const WordSet& wh_words() {
  static const WordSet s = make_set("who whom which what where when why how");
  return s;
}

inline const WordSet& prepositions() {
  static const WordSet s = make_set(
      "of in on at by for with about against between into through during before after above "
      "below to from up down over under within without along across behind beyond toward "
      "towards upon among around despite via per like unlike until including regarding "
      "concerning versus than onto throughout amid beside besides near");
  return s;
}

inline const WordSet& subordinators() {
  static const WordSet s =
      make_set("because although though if unless while whereas since once whether");
  return s;
}

inline const WordSet& coordinators() {
  static const WordSet s = make_set("and or but nor yet");
  return s;
}

inline const WordMap& auxiliaries() {
  static const WordMap m = make_map(
      "am:be is:be are:be was:be were:be be:be been:be being:be 's:be 're:be 'm:be "
      "have:have has:have had:have having:have 've:have 'd:would "
      "do:do does:do did:do "
      "can:can could:could will:will would:would shall:shall should:should may:may "
      "might:might must:must 'll:will ca:can wo:will");
  return m;
}

inline bool is_be_form(std::string_view lemma) { return lemma == "be"; }

inline const WordSet& adverbs() {
  static const WordSet s = make_set(
      "also very too so just only even still already often always never sometimes usually "
      "generally typically however therefore thus then there here now soon later again more "
      "most less least much well rather quite almost else ago instead together perhaps maybe "
      "surely indeed really especially particularly mainly mostly nearly hardly simply "
      "currently recently quickly slowly early far fast away back forward ever once twice "
      "otherwise meanwhile furthermore moreover afterwards somewhat not");
  return s;
}

inline const WordSet& adjectives() {
  static const WordSet s = make_set(
      "new old good bad high low hard soft big small large little long short great strong "
      "weak important available applicable possible likely unlikely able free full open "
      "public private personal financial economic legal social common general specific "
      "simple complex clear different same other such own certain several various many few "
      "whole entire main major minor recent last next first second third final only early "
      "late current future past previous total average positive negative real true false "
      "young right wrong easy difficult poor rich fair unfair late overdue due high-risk "
      "low-risk responsible necessary additional annual monthly daily yearly federal "
      "national international local natural human better best worse worst higher lower "
      "highest lowest more most less least fewer key major typical significant "
      "contrastive explainable automated automatic artificial neural regular revolving "
      "installment secured unsecured existing outstanding critical relevant useful helpful");
  return s;
}

/// Adjectives that qualify rather than classify; kept in a syntagm's surface
/// but left out of its lemma.
inline const WordSet& qualitative_adjectives() {
  static const WordSet s = make_set(
      "new old good bad big small large little long short great other such own same certain "
      "several various many few whole entire main major minor recent last next first second "
      "third final only early late current previous different better best worse worst "
      "additional specific particular very more most less least much fewer important "
      "significant typical real true actual possible likely");
  return s;
}

/// Nouns whose ending looks adjectival ("library", "logic").
inline const WordSet& suffix_exceptions() {
  static const WordSet s = make_set(
      "library summary salary boundary dictionary secretary anniversary glossary beneficiary diary "
      "commentary documentary vocabulary itinerary sanctuary mercenary missionary adversary "
      "logic music public topic clinic traffic republic fabric panic mechanic critic relative "
      "objective initiative incentive executive representative alternative narrative detective "
      "derivative perspective directive native collective archive motive");
  return s;
}

inline const WordSet& verbs() {
  static const WordSet s = make_set(
      "be have do say get make go know take see come think look want give use find tell ask "
      "work seem feel try leave call need become put mean keep let begin help show hear play "
      "run move live believe bring happen write provide sit stand lose pay meet include "
      "continue set learn change lead understand watch follow stop create speak read allow "
      "add spend grow open walk win offer remember love consider appear buy wait serve die "
      "send expect build stay fall cut reach kill remain suggest raise pass sell require "
      "report decide pull return explain hope develop carry break receive agree support hit "
      "produce eat cover catch draw choose cause point listen realize place close involve "
      "increase decrease reduce affect approve deny apply borrow lend owe repay calculate "
      "compute relate determine contain represent measure evaluate assess predict classify "
      "check review record track monitor manage maintain miss charge cost earn save own hold "
      "issue accept reject decline request submit sign drop fix rain sleep drink drive fly "
      "lower indicate describe define improve prevent protect consist depend differ exist "
      "occur result vary base compare count list rate score weigh limit exceed avoid "
      "obtain gain enable ensure estimate generate identify process qualify reflect remove "
      "replace reveal settle share total train transfer trigger update verify default "
      "refinance finance invest deposit withdraw bank credit debit qualify explain annotate "
      "click navigate extract answer question summarize cluster display lower appear "
      "influence impact signal prove factor mention treat face pose handle address publish "
      "inquire enter form join fill bear arise rise sink spread steal strike swear "
      "swim teach tear throw wake wear wind shake shine shoot shrink shut sing speed "
      "spin split spring stick sting stink stride string strive sweep swing forbid forget "
      "forgive freeze hang hide hurt feed fight flee fling bend bet bind bite bleed blow "
      "burn burst cling creep deal dig dream hold kneel lay lie light mislead overcome "
      "prove quit ride ring seek seek sew slide sling slit sneak sow stride undergo "
      "undertake upset withhold withstand divide multiply subtract open close happen matter concern discuss cancel delay decline grant assign encourage contribute retain warn penalize penalise lock freeze dispute correct rebuild establish demonstrate guarantee account collect store end");
  return s;
}

// inflected form -> lemma for irregular verbs
inline const WordMap& irregular_verbs() {
  static const WordMap m = make_map(
      "said:say got:get gotten:get made:make went:go gone:go knew:know known:know took:take "
      "taken:take saw:see seen:see came:come thought:think gave:give given:give found:find "
      "told:tell felt:feel left:leave meant:mean kept:keep began:begin begun:begin showed:show "
      "shown:show heard:hear ran:run brought:bring wrote:write written:write sat:sit "
      "stood:stand lost:lose paid:pay met:meet led:lead understood:understand spoke:speak "
      "spoken:speak read:read spent:spend grew:grow grown:grow won:win bought:buy built:build "
      "fell:fall fallen:fall sold:sell broke:break broken:break chose:choose chosen:choose "
      "caught:catch drew:draw drawn:draw ate:eat eaten:eat drank:drink drunk:drink "
      "drove:drive driven:drive flew:fly flown:fly slept:sleep held:hold lent:lend owed:owe "
      "dealt:deal became:become forgot:forget forgotten:forget hid:hide hidden:hide "
      "rose:rise risen:rise arose:arise arisen:arise bore:bear borne:bear taught:teach "
      "threw:throw thrown:throw woke:wake woken:wake wore:wear worn:wear shook:shake "
      "shaken:shake shot:shoot sang:sing sung:sing fought:fight fed:feed fled:flee "
      "sought:seek stuck:stick struck:strike swept:sweep swung:swing hung:hang hurt:hurt "
      "bent:bend bet:bet bound:bind bit:bite bitten:bite blew:blow blown:blow burnt:burn "
      "dug:dig laid:lay lain:lie lit:light misled:mislead overcame:overcome quit:quit "
      "rode:ride ridden:ride rang:ring rung:ring slid:slide undergone:undergo "
      "underwent:undergo undertook:undertake undertaken:undertake withheld:withhold "
      "froze:freeze frozen:freeze forgave:forgive forgiven:forgive forbade:forbid "
      "forbidden:forbid set:set put:put cut:cut let:let cost:cost shut:shut spread:spread "
      "split:split withdrew:withdraw withdrawn:withdraw");
  return m;
}

inline const WordMap& irregular_nouns() {
  static const WordMap m = make_map(
      "people:person children:child men:man women:woman feet:foot teeth:tooth mice:mouse "
      "geese:goose criteria:criterion phenomena:phenomenon analyses:analysis bases:basis "
      "crises:crisis theses:thesis hypotheses:hypothesis indices:index matrices:matrix "
      "appendices:appendix lives:life wives:wife knives:knife leaves:leaf halves:half "
      "shelves:shelf selves:self thieves:thief wolves:wolf loaves:loaf calves:calf "
      "data:data media:media");
  return m;
}

// words ending in "s" that are not plurals
inline const WordSet& invariant_nouns() {
  static const WordSet s = make_set(
      "news series species means this his its us as has was is does yes always perhaps "
      "bus gas lens plus thus various previous its chaos canvas atlas bias alias status "
      "corpus virus census campus bonus focus genus apparatus surplus consensus analysis "
      "basis crisis thesis diagnosis emphasis hypothesis synopsis economics mathematics "
      "physics statistics ethics politics whereas whereupon towards afterwards besides "
      "sometimes nowadays savings earnings");
  return s;
}

inline const WordSet& abbreviations() {
  static const WordSet s = make_set(
      "mr. mrs. ms. dr. prof. st. jr. sr. inc. ltd. co. corp. vs. etc. e.g. i.e. u.s. u.k. "
      "no. fig. approx. jan. feb. mar. apr. jun. jul. aug. sep. sept. oct. nov. dec.");
  return s;
}

inline const WordSet& number_words() {
  static const WordSet s = make_set(
      "zero two three four five six seven eight nine ten eleven twelve thirteen fourteen "
      "fifteen sixteen seventeen eighteen nineteen twenty thirty forty fifty sixty seventy "
      "eighty ninety hundred thousand million billion trillion dozen");
  return s;
}

/// "thirty-five", "twenty-one"
inline bool is_number_word(std::string_view w) {
  for (const auto& part : text::split(w, '-'))
    if (!number_words().count(part) && part != "one") return false;
  return !w.empty() && w.front() != '-' && w.back() != '-';
}

inline const WordSet& month_names() {
  static const WordSet s = make_set(
      "january february march april may june july august september october november december");
  return s;
}

}  // namespace espace::nlp::english
