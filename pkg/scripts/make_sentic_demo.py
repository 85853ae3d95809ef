#!/usr/bin/env python3
"""Build the bundled concept-affect demo table
(src/rumourlens/data/sentic_demo.csv): 500 concepts with pleasantness,
attention, sensitivity, aptitude and polarity in [-1, 1].

Values are drawn from a seeded RNG and nudged toward the sign of each
concept's sentiment bucket, then rounded to 4 decimals so the CSV
round-trips bit-exactly. A compact stand-in for a full concept
knowledge base; a real table drops in through the same CSV format or
`fetch-sentic`.
"""

from pathlib import Path

import numpy as np

OUT = Path(__file__).resolve().parent.parent / "src" / "rumourlens" / "data" / "sentic_demo.csv"

POSITIVE = """
celebrate love joy happiness smile laugh friend hope peace calm gift win winner
success victory beautiful wonderful amazing awesome excellent great good nice
kind brave hero rescue save safe relief comfort warm welcome praise support
help thank grateful blessing proud courage honest trust truth freedom justice
fair honor glory delight pleasure enjoy fun play party music dance sing song
holiday vacation sunshine spring flower garden bird home family mother father
child baby birth wedding marriage kiss hug embrace charity generous gentle
wisdom learn teach knowledge discover create build grow heal cure recover
improve progress achieve accomplish reward bonus prosper wealth fortune luck
special_occasion celebrate_special_occasion happy_birthday good_news
great_success warm_welcome safe_place best_friend true_love bright_future
peace_agreement rescue_team helping_hand good_faith
""".split()

NEGATIVE = """
fear terror panic horror dread scare afraid threat danger risk attack assault
murder kill death dead die corpse victim massacre war battle bomb explosion
gun shoot shot knife wound injury blood pain hurt suffer agony torture cruel
evil hate hatred rage anger fury hostile violent crash disaster catastrophe
tragedy crisis emergency chaos riot protest unrest storm flood fire earthquake
famine disease virus infection plague poison toxic crime thief steal rob
fraud lie liar deceive cheat betray corrupt scandal shame disgrace insult
abuse bully harass disaster_zone hostage siege gunman terrorist hijack
kidnap ransom grief sorrow mourn cry tears despair misery depression anxiety
worry stress doubt suspicion rumor hoax fake false mislead panic_attack
breaking_news false_alarm death_toll air_crash plane_crash car_accident
mass_shooting terror_attack bomb_threat missing_person armed_robbery
deadly_virus health_crisis economic_crisis lose loss lost fail failure defeat
""".split()

NEUTRAL = """
time day night morning evening week month year hour minute moment news report
statement announcement update information message word sentence language story
account source quote headline photo picture image video camera record police
government president minister official mayor city town street road bridge
building house office school hospital airport station train bus car plane
boat ship water river sea ocean mountain forest field park weather rain snow
wind cloud sun moon star sky earth ground stone rock metal glass paper book
page letter number count money price cost market trade business company work
job worker staff team group member public crowd people person human citizen
society community country nation world region area place location zone border
question answer problem solution reason result cause effect change start end
begin finish open close move stay wait walk run drive fly travel arrive leave
return visit meet talk speak say tell ask call write read watch see hear feel
think know understand believe remember forget decide choose plan expect
prepare follow lead bring take give get find keep hold put turn show look
point case fact event incident situation condition state level rate percent
measure test check search investigation evidence witness claim confirm deny
museum art collection painting concert band show performance audience ticket
stage football match game score goal player coach season phone computer screen
internet website network signal radio television channel paper_work door window
wall floor roof kitchen table chair bed clothes shoes food bread milk coffee
tea dinner lunch breakfast restaurant shop store queue line list item detail
pop_up_show secret_concert art_collection press_conference social_media
public_transport city_center train_station police_officer prime_minister
""".split()


def main() -> None:
    rng = np.random.default_rng(20240317)
    rows = []
    seen = set()
    for bucket, names in (("pos", POSITIVE), ("neg", NEGATIVE), ("neu", NEUTRAL)):
        for name in names:
            if name in seen:
                continue
            seen.add(name)
            vals = rng.uniform(-1.0, 1.0, size=5)
            if bucket == "pos":
                vals[0] = abs(vals[0]) * 0.9 + 0.05  # pleasantness
                vals[4] = abs(vals[4]) * 0.9 + 0.05  # polarity
            elif bucket == "neg":
                vals[0] = -(abs(vals[0]) * 0.9 + 0.05)
                vals[4] = -(abs(vals[4]) * 0.9 + 0.05)
            else:
                vals[0] *= 0.3
                vals[4] *= 0.3
            vals[1:4] *= 0.8  # attention, sensitivity, aptitude stay moderate
            rows.append((name, np.round(vals, 4)))
            if len(rows) == 500:
                break
        if len(rows) == 500:
            break
    if len(rows) < 500:
        raise SystemExit(f"only {len(rows)} concepts listed; need 500")
    with open(OUT, "w", encoding="utf-8", newline="") as fh:
        fh.write("concept,pleasantness,attention,sensitivity,aptitude,polarity\n")
        for name, vals in rows:
            fh.write(name + "," + ",".join(format(v, "g") for v in vals) + "\n")
    print(f"wrote {OUT}: {len(rows)} concepts")


if __name__ == "__main__":
    main()
