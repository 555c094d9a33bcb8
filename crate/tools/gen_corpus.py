#!/usr/bin/env python3
"""Regenerates the bundled sample corpus under testdata/corpus/.

The corpus is synthetic: sentences are drawn word-by-word from the embedded
frequency-weighted list of common English words below, so its letter and
letter-pair statistics track ordinary English prose while the text itself
carries no copyright. Generation is deterministic (fixed PRNG seed); running
this script always reproduces the shipped files byte for byte.

Usage: python3 tools/gen_corpus.py [out_dir]
"""

import random
import sys
from pathlib import Path

SEED = 20240911
FILES = [("sample_a.txt", 2000), ("sample_b.txt", 1500), ("sample_c.txt", 1100)]  # sentences each

# The word list below is truncated at ~450 entries, which over-represents the
# few top function words relative to running English text; sampling with
# weight**ALPHA restores roughly the letter distribution of ordinary prose.
ALPHA = 0.72

# (word, weight) — weights approximate relative usage frequencies in general
# written English, lightly extended with content words so every letter of the
# alphabet appears.
WORDS = [
    ("the", 69970), ("of", 36410), ("and", 28850), ("to", 26150), ("a", 23240),
    ("in", 21340), ("that", 10590), ("is", 10100), ("was", 9820), ("he", 9540),
    ("for", 9410), ("it", 8760), ("with", 7290), ("as", 7250), ("his", 6990),
    ("on", 6740), ("be", 6380), ("at", 5380), ("by", 5310), ("i", 5180),
    ("this", 5150), ("had", 5130), ("not", 4610), ("are", 4390), ("but", 4380),
    ("from", 4370), ("or", 4210), ("have", 3940), ("an", 3750), ("they", 3620),
    ("which", 3560), ("one", 3290), ("you", 3280), ("were", 3280), ("her", 3040),
    ("all", 3000), ("she", 2860), ("there", 2720), ("would", 2680), ("their", 2670),
    ("we", 2650), ("him", 2620), ("been", 2470), ("has", 2440), ("when", 2330),
    ("who", 2250), ("will", 2240), ("more", 2220), ("no", 2200), ("if", 2190),
    ("out", 2100), ("so", 1980), ("said", 1960), ("what", 1910), ("up", 1890),
    ("its", 1860), ("about", 1810), ("into", 1790), ("than", 1790), ("them", 1790),
    ("can", 1770), ("only", 1750), ("other", 1700), ("new", 1640), ("some", 1620),
    ("could", 1600), ("time", 1600), ("these", 1570), ("two", 1410), ("may", 1400),
    ("then", 1380), ("do", 1360), ("first", 1360), ("any", 1340), ("my", 1320),
    ("now", 1310), ("such", 1300), ("like", 1290), ("our", 1250), ("over", 1240),
    ("man", 1210), ("me", 1180), ("even", 1170), ("most", 1160), ("made", 1120),
    ("after", 1070), ("also", 1060), ("did", 1050), ("many", 1030), ("before", 1020),
    ("must", 1010), ("through", 970), ("back", 960), ("years", 950), ("where", 940),
    ("much", 940), ("your", 930), ("way", 910), ("well", 900), ("down", 890),
    ("should", 890), ("because", 880), ("each", 880), ("just", 870), ("those", 850),
    ("people", 840), ("how", 830), ("too", 820), ("little", 810), ("state", 800),
    ("good", 800), ("very", 790), ("make", 780), ("world", 770), ("still", 760),
    ("own", 740), ("see", 740), ("men", 730), ("work", 730), ("long", 720),
    ("get", 720), ("here", 710), ("between", 710), ("both", 700), ("life", 700),
    ("being", 690), ("under", 680), ("never", 670), ("day", 660), ("same", 660),
    ("another", 650), ("know", 640), ("while", 640), ("last", 630), ("might", 630),
    ("us", 620), ("great", 620), ("old", 610), ("year", 600), ("off", 600),
    ("come", 590), ("since", 580), ("against", 580), ("go", 570), ("came", 570),
    ("right", 560), ("used", 550), ("take", 550), ("three", 540), ("states", 530),
    ("himself", 520), ("few", 520), ("house", 510), ("use", 510), ("during", 500),
    ("without", 500), ("again", 490), ("place", 490), ("around", 480), ("however", 470),
    ("home", 470), ("small", 460), ("found", 460), ("thought", 450), ("went", 450),
    ("say", 440), ("part", 440), ("once", 430), ("general", 430), ("high", 430),
    ("upon", 420), ("school", 420), ("every", 420), ("does", 410), ("got", 410),
    ("united", 400), ("left", 400), ("number", 400), ("course", 390), ("war", 390),
    ("until", 390), ("always", 380), ("away", 380), ("something", 380), ("fact", 370),
    ("though", 370), ("water", 370), ("less", 360), ("public", 360), ("put", 360),
    ("think", 360), ("almost", 350), ("hand", 350), ("enough", 350), ("far", 350),
    ("took", 340), ("head", 340), ("yet", 340), ("government", 340), ("system", 330),
    ("better", 330), ("set", 330), ("told", 330), ("nothing", 320), ("night", 320),
    ("end", 320), ("why", 320), ("called", 310), ("didnt", 310), ("eyes", 310),
    ("find", 300), ("going", 300), ("look", 300), ("asked", 300), ("later", 290),
    ("knew", 290), ("point", 290), ("next", 280), ("program", 280), ("city", 280),
    ("business", 270), ("give", 270), ("group", 270), ("toward", 270), ("young", 270),
    ("days", 260), ("let", 260), ("room", 260), ("within", 260), ("children", 250),
    ("side", 250), ("social", 250), ("given", 250), ("order", 250), ("present", 250),
    ("several", 240), ("national", 240), ("second", 240), ("possible", 240), ("rather", 240),
    ("per", 230), ("face", 230), ("among", 230), ("form", 230), ("important", 230),
    ("often", 220), ("things", 220), ("looked", 220), ("early", 220), ("white", 220),
    ("case", 220), ("become", 210), ("best", 210), ("need", 210), ("large", 210),
    ("interest", 210), ("big", 200), ("four", 200), ("felt", 200), ("along", 200),
    ("seemed", 200), ("turned", 200), ("power", 200), ("country", 200), ("although", 190),
    ("love", 190), ("open", 190), ("seen", 190), ("kind", 190), ("others", 190),
    ("area", 190), ("different", 180), ("keep", 180), ("thing", 180), ("began", 180),
    ("door", 180), ("example", 180), ("certain", 180), ("problem", 180), ("whole", 170),
    ("mind", 170), ("having", 170), ("means", 170), ("service", 170), ("feet", 170),
    ("today", 170), ("both", 160), ("others", 160), ("perhaps", 160), ("saw", 160),
    ("help", 160), ("itself", 160), ("study", 160), ("least", 160), ("light", 160),
    ("result", 150), ("matter", 150), ("making", 150), ("able", 150), ("rest", 150),
    ("sure", 150), ("came", 150), ("money", 150), ("human", 150), ("party", 150),
    ("real", 140), ("full", 140), ("behind", 140), ("action", 140), ("members", 140),
    ("value", 140), ("week", 140), ("words", 140), ("moment", 140), ("question", 140),
    ("quite", 130), ("together", 130), ("voice", 130), ("almost", 130), ("already", 130),
    ("information", 130), ("taken", 130), ("anything", 130), ("feel", 120), ("body", 120),
    ("sense", 120), ("field", 120), ("major", 120), ("period", 120), ("whether", 120),
    ("done", 120), ("become", 120), ("shown", 110), ("experience", 110),
    ("idea", 110), ("known", 110), ("child", 110), ("across", 110), ("college", 110),
    ("church", 110), ("level", 110), ("else", 100), ("themselves", 100),
    ("local", 100), ("sound", 100), ("future", 100), ("half", 100), ("hands", 100),
    ("move", 100), ("girl", 100), ("held", 100), ("cost", 100), ("evening", 100),
    ("six", 100), ("office", 90), ("music", 90), ("short", 90), ("road", 90),
    ("outside", 90), ("figure", 90), ("plan", 90), ("act", 90), ("book", 90),
    ("brought", 90), ("common", 90), ("close", 90), ("nature", 90), ("true", 90),
    ("history", 90), ("size", 90), ("subject", 90), ("special", 80), ("ground", 80),
    ("nearly", 80), ("table", 80), ("usually", 80), ("free", 80), ("necessary", 80),
    ("personal", 80), ("strong", 80), ("surface", 80), ("project", 80), ("quality", 80),
    ("expect", 70), ("various", 70), ("report", 70), ("nation", 70), ("lines", 70),
    ("clear", 70), ("job", 70), ("exactly", 70), ("private", 70), ("market", 70),
    ("basis", 70), ("space", 70), ("modern", 70), ("complete", 70), ("deep", 70),
    ("further", 60), ("force", 60), ("type", 60), ("gave", 60), ("economic", 60),
    ("view", 60), ("join", 60), ("simply", 60), ("model", 60), ("lost", 60),
    ("paper", 60), ("president", 60), ("front", 60), ("effect", 60), ("student", 60),
    ("class", 60), ("century", 60), ("provide", 60), ("judge", 50), ("quick", 50),
    ("equal", 50), ("piece", 50), ("daily", 50), ("analysis", 50), ("method", 50),
    ("basic", 50), ("trade", 50), ("organization", 50), ("step", 50), ("summer", 50),
    ("research", 50), ("square", 50), ("dark", 50), ("language", 50), ("object", 50),
    ("zero", 40), ("zone", 40), ("citizen", 40), ("dozen", 30), ("crazy", 30),
    ("lazy", 30), ("puzzle", 30), ("prize", 30), ("extra", 40), ("oxygen", 30),
    ("taxes", 40), ("mixed", 30), ("index", 30), ("boxes", 30), ("sixty", 30),
    ("enjoy", 40), ("jumped", 30), ("justice", 40), ("joined", 40), ("journey", 30),
    ("quiet", 40), ("request", 40), ("frequency", 40), ("unique", 30), ("squeeze", 20),
]

PUNCT_WEIGHTS = [(".", 70), ("?", 10), ("!", 5), (".", 15)]


def pick_punct(rng):
    total = sum(w for _, w in PUNCT_WEIGHTS)
    r = rng.randrange(total)
    for p, w in PUNCT_WEIGHTS:
        r -= w
        if r < 0:
            return p
    return "."


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("testdata/corpus")
    out_dir.mkdir(parents=True, exist_ok=True)

    words = [w for w, wt in WORDS if wt > 0]
    weights = [wt ** ALPHA for _, wt in WORDS if wt > 0]
    rng = random.Random(SEED)

    for name, sentence_count in FILES:
        paragraphs = []
        sentence_in_par = 0
        par_target = rng.randint(3, 7)
        lines = []
        for s in range(sentence_count):
            n = rng.randint(6, 14)
            picked = rng.choices(words, weights=weights, k=n)
            # occasional mid-sentence comma and occasional numeral
            if n >= 9:
                picked[rng.randint(2, n - 3)] += ","
            if rng.random() < 0.04:
                picked.insert(rng.randint(1, n - 1), str(rng.randint(2, 1999)))
            sentence = " ".join(picked)
            sentence = sentence[0].upper() + sentence[1:] + pick_punct(rng)
            lines.append(sentence)
            sentence_in_par += 1
            if sentence_in_par >= par_target:
                paragraphs.append(" ".join(lines))
                lines = []
                sentence_in_par = 0
                par_target = rng.randint(3, 7)
        if lines:
            paragraphs.append(" ".join(lines))
        text = "\n\n".join(paragraphs) + "\n"
        (out_dir / name).write_text(text, encoding="utf-8")
        print(f"wrote {out_dir / name}: {len(text)} bytes")


if __name__ == "__main__":
    main()
