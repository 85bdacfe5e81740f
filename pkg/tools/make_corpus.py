#!/usr/bin/env python3
"""Generate the bundled 500-sentence sample corpus.

Sentences are drawn from seeded templates over the bundled dictionary's
vocabulary (every lowercase word is validated against dictionary.txt, so
importance scoring has near-total coverage). A small fraction of sentences
carry an out-of-vocabulary proper name to keep the corpus realistic.

Usage: python tools/make_corpus.py [output_path]
"""

import random
import sys
from pathlib import Path

ASSETS = Path(__file__).resolve().parent.parent / "src" / "punctext" / "assets"

ROLES = [
    ("teacher", "teachers"), ("engineer", "engineers"), ("farmer", "farmers"),
    ("merchant", "merchants"), ("scholar", "scholars"), ("sailor", "sailors"),
    ("architect", "architects"), ("musician", "musicians"),
    ("historian", "historians"), ("researcher", "researchers"),
    ("carpenter", "carpenters"), ("painter", "painters"),
    ("soldier", "soldiers"), ("lawyer", "lawyers"), ("doctor", "doctors"),
    ("journalist", "journalists"), ("librarian", "librarians"),
    ("astronomer", "astronomers"), ("geologist", "geologists"),
    ("diplomat", "diplomats"), ("surveyor", "surveyors"),
    ("translator", "translators"), ("gardener", "gardeners"),
    ("economist", "economists"), ("inspector", "inspectors"),
]

OBJECTS = [
    ("bridge", "bridges"), ("library", "libraries"), ("harbor", "harbors"),
    ("railway", "railways"), ("factory", "factories"), ("garden", "gardens"),
    ("archive", "archives"), ("monument", "monuments"), ("ledger", "ledgers"),
    ("manuscript", "manuscripts"), ("granary", "granaries"),
    ("windmill", "windmills"), ("reservoir", "reservoirs"),
    ("lighthouse", "lighthouses"), ("orchard", "orchards"),
    ("cathedral", "cathedrals"), ("fountain", "fountains"),
    ("telescope", "telescopes"), ("turbine", "turbines"),
    ("warehouse", "warehouses"), ("vineyard", "vineyards"),
    ("furnace", "furnaces"), ("aqueduct", "aqueducts"),
    ("observatory", "observatories"), ("causeway", "causeways"),
]

PLACES = [
    "valley", "harbor", "village", "district", "plaza", "market",
    "castle", "museum", "quarry", "meadow", "plateau", "peninsula",
    "estuary", "canyon", "citadel", "courtyard", "terrace", "grove",
    "frontier", "basin", "province", "township", "crossing", "ridge",
]

ADJS = [
    "ancient", "narrow", "spacious", "crumbling", "restored", "famous",
    "quiet", "bustling", "remote", "fertile", "rugged", "elegant",
    "modest", "sturdy", "weathered", "gleaming", "abandoned", "thriving",
    "historic", "coastal", "northern", "southern", "eastern", "western",
    "medieval", "colonial", "industrial", "agricultural", "prosperous",
    "humble", "grand", "serene", "turbulent", "scenic", "vibrant",
]

VERBS_T = [
    "examined", "restored", "measured", "sketched", "surveyed",
    "repaired", "expanded", "documented", "inspected", "photographed",
    "catalogued", "rebuilt", "renovated", "acquired", "auctioned",
    "inherited", "commissioned", "demolished", "excavated", "mapped",
    "praised", "criticized", "studied", "described", "purchased",
]

VERBS_REPORT = [
    "announced", "reported", "confirmed", "suggested", "revealed",
    "predicted", "argued", "declared", "estimated", "acknowledged",
    "insisted", "concluded", "observed", "noted", "warned",
]

ORGS = [
    "council", "committee", "ministry", "guild", "federation", "assembly",
    "bureau", "commission", "society", "foundation", "delegation",
    "parliament", "senate", "academy", "institute", "cooperative",
]

ABSTRACT = [
    ("proposal", "proposals"), ("budget", "budgets"), ("survey", "surveys"),
    ("petition", "petitions"), ("charter", "charters"), ("treaty", "treaties"),
    ("blueprint", "blueprints"), ("statute", "statutes"),
    ("forecast", "forecasts"), ("tariff", "tariffs"), ("subsidy", "subsidies"),
    ("manifesto", "manifestos"), ("referendum", "referendums"),
    ("memorandum", "memorandums"), ("ordinance", "ordinances"),
]

SEASONS = ["spring", "summer", "autumn", "winter"]
UNITS = ["weeks", "months", "seasons", "decades", "days", "years"]
ADVERBS = [
    "carefully", "quietly", "eagerly", "reluctantly", "thoroughly",
    "patiently", "swiftly", "gradually", "repeatedly", "diligently",
    "cautiously", "proudly", "secretly", "openly", "steadily",
]

OOV_NAMES = [
    "Harlan", "Mirela", "Ostrov", "Quenby", "Tarwick", "Velmor",
    "Ashdun", "Brenholt", "Corvale", "Drayton", "Elsbury", "Fenwick",
]

TEMPLATES = [
    ("During the {adj1} {season}, the {adj2} {roles} {vt} the {adj3} "
     "{obj} near the {adj4} {place}, and the {org} approved the {abstract} "
     "within {num} {unit}."),
    ("The {role} who {vt} the {obj} in {year} later {vrep} that the "
     "{adj1} {place} would require {num} more {unit} of {adj2} labor "
     "before the {season} arrived."),
    ("After {num} {unit} of {adj1} debate, the {org} finally {vrep} that "
     "the {adj2} {obj} beside the {place} deserved a {adj3} {abstract} "
     "and a far more {adj4} budget."),
    ("Several {adj1} {roles} from the {adj2} {place} {vt} the {obj} "
     "during the {season} of {year}, although the {org} had {vrep} that "
     "such {adj3} efforts were premature."),
    ("In the {adj1} {place}, a {adj2} {role} {adv} {vt} the {adj3} "
     "{obj}, while the neighboring {org} prepared a {abstract} for the "
     "coming {season} festival."),
    ("The {org} {vrep} on {weekday} that {num} {adj1} {objs} across the "
     "{adj2} {place} would be {vt2} before the end of the {season}, "
     "despite the {adj3} weather."),
    ("Between {year} and {year2}, the {adj1} {roles} of the {place} "
     "{adv} {vt} every {adj2} {obj} in the district, earning the {adj3} "
     "respect of the entire {org}."),
    ("When the {adj1} {season} rains flooded the {place}, the {role} "
     "and the {roles2} {adv} {vt} the {adj2} {obj} and carried its "
     "{adj3} contents to the {org} hall."),
    ("The {adj1} {abstract} that the {org} published in {year} {adv} "
     "described how the {adj2} {obj} near the {place} had shaped the "
     "fortunes of local {roles} for {num} {unit}."),
    ("Although the {adj1} {role} had never visited the {adj2} {place}, "
     "he {adv} {vt} the {obj} from {adj3} sketches and won the {org} "
     "prize of {year}."),
    ("The {roles} gathered in the {adj1} {place} every {season}, where "
     "they {vt} the {adj2} {obj} and debated the {abstract} that the "
     "{org} had {vrep2} the previous {unit2}."),
    ("A {adj1} {role} from the {place} once {vt} the {adj2} {obj} in "
     "barely {num} {unit}, a feat that the {adj3} {org} {adv} "
     "celebrated for decades afterwards."),
]

WEEKDAYS = ["monday", "tuesday", "wednesday", "thursday", "friday"]


def load_dictionary_words() -> set[str]:
    words = set()
    with open(ASSETS / "dictionary.txt", encoding="utf-8") as fh:
        for line in fh:
            words.add(line.split()[0])
    return words


def fill(template: str, rng: random.Random) -> str:
    role_sg, role_pl = rng.choice(ROLES)
    roles2 = rng.choice(ROLES)[1]
    obj_sg, obj_pl = rng.choice(OBJECTS)
    abstract = rng.choice(ABSTRACT)[0]
    year = rng.randint(1720, 1990)
    adjs = rng.sample(ADJS, 4)
    sent = template.format(
        adj1=adjs[0], adj2=adjs[1], adj3=adjs[2], adj4=adjs[3],
        season=rng.choice(SEASONS), roles=role_pl, roles2=roles2,
        role=role_sg, vt=rng.choice(VERBS_T), vt2=rng.choice(VERBS_T),
        obj=obj_sg, objs=obj_pl, org=rng.choice(ORGS),
        abstract=abstract, num=rng.choice(["two", "three", "four", "five",
                                           "six", "seven", "eight", "nine"]),
        unit=rng.choice(UNITS), unit2=rng.choice(UNITS)[:-1],
        vrep=rng.choice(VERBS_REPORT), vrep2=rng.choice(VERBS_REPORT),
        place=rng.choice(PLACES), adv=rng.choice(ADVERBS),
        year=year, year2=year + rng.randint(3, 40),
        weekday=rng.choice(WEEKDAYS),
    )
    sent = sent[0].upper() + sent[1:]
    return sent


def inject_name(sentence: str, rng: random.Random) -> str:
    words = sentence.split()
    # replace the first occurrence of a role word with a proper name
    for i, w in enumerate(words[1:], 1):
        if w in {r for pair in ROLES for r in pair}:
            words[i] = rng.choice(OOV_NAMES)
            return " ".join(words)
    return sentence


def main() -> None:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else ASSETS / "corpus.txt"
    dict_words = load_dictionary_words()
    oov_lower = {n.lower() for n in OOV_NAMES}
    rng = random.Random(20240931)

    sentences = []
    unknown: set[str] = set()
    while len(sentences) < 500:
        template = TEMPLATES[len(sentences) % len(TEMPLATES)]
        sent = fill(template, rng)
        if rng.random() < 0.08:
            sent = inject_name(sent, rng)
        # validate vocabulary coverage (names exempt)
        for raw in sent.split():
            w = raw.strip(",.();").lower()
            if w and w.isalpha() and w not in dict_words and w not in oov_lower:
                unknown.add(w)
        if len(sent.split()) < 20:
            continue
        sentences.append(sent)

    if unknown:
        raise SystemExit(f"words missing from dictionary: {sorted(unknown)}")

    with open(out, "w", encoding="utf-8") as fh:
        for s in sentences:
            fh.write(s + "\n")
    lengths = [len(s) for s in sentences]
    print(f"wrote {len(sentences)} sentences to {out} "
          f"(chars min={min(lengths)} mean={sum(lengths)/len(lengths):.0f} "
          f"max={max(lengths)})")


if __name__ == "__main__":
    main()
