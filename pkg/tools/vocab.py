"""Curated base vocabulary for the bundled dictionary and sample corpus.

Each entry carries a coarse frequency tier (0 = most common). Open-class
entries carry morphology hints so the dictionary generator can expand
regular inflections without producing non-words:

  nouns:  (word, tier, plural)   plural: "s" regular rules, "-" none,
                                 or the explicit plural form
  verbs:  (word, tier, forms)    forms: "r" regular, "d" regular with final
                                 consonant doubling, or "past:part:ing:3s"
  adjs:   (word, tier, adv)      adv: "l" derive the -ly adverb, "-" none
"""

# --- closed-class and function words -------------------------------------

FUNCTION_WORDS = [
    ("the", 0), ("of", 0), ("and", 0), ("to", 0), ("a", 0), ("in", 0),
    ("is", 0), ("was", 0), ("that", 0), ("for", 0), ("it", 0), ("as", 0),
    ("with", 0), ("on", 0), ("by", 0), ("at", 0), ("from", 0), ("are", 0),
    ("this", 0), ("be", 0), ("an", 0), ("or", 0), ("were", 0), ("which", 0),
    ("but", 0), ("not", 0), ("his", 0), ("they", 0), ("have", 0), ("had", 0),
    ("has", 0), ("their", 0), ("its", 0), ("been", 0), ("than", 0),
    ("who", 0), ("will", 0), ("would", 0), ("can", 0), ("could", 0),
    ("into", 1), ("during", 1), ("between", 1), ("after", 1), ("before", 1),
    ("over", 1), ("under", 1), ("through", 1), ("about", 1), ("against", 1),
    ("among", 1), ("within", 1), ("without", 1), ("along", 1), ("across", 1),
    ("behind", 1), ("beyond", 1), ("near", 1), ("above", 1), ("below", 1),
    ("around", 1), ("toward", 1), ("towards", 2), ("upon", 1), ("until", 1),
    ("since", 1), ("while", 1), ("because", 1), ("although", 1), ("though", 1),
    ("when", 0), ("where", 0), ("what", 0), ("why", 1), ("how", 0),
    ("all", 0), ("each", 1), ("every", 1), ("some", 0), ("any", 0),
    ("many", 1), ("much", 1), ("more", 0), ("most", 0), ("few", 1),
    ("several", 1), ("both", 1), ("either", 2), ("neither", 2), ("other", 0),
    ("another", 1), ("such", 1), ("same", 1), ("own", 1), ("so", 0),
    ("then", 0), ("there", 0), ("here", 1), ("now", 0), ("also", 0),
    ("only", 0), ("just", 1), ("even", 1), ("still", 1), ("yet", 1),
    ("again", 1), ("once", 1), ("twice", 3), ("often", 1), ("always", 1),
    ("never", 1), ("sometimes", 2), ("usually", 2), ("rarely", 3),
    ("almost", 1), ("quite", 2), ("very", 0), ("too", 1), ("rather", 2),
    ("instead", 2), ("perhaps", 2), ("however", 1), ("therefore", 2),
    ("moreover", 3), ("meanwhile", 3), ("finally", 2), ("eventually", 2),
    ("he", 0), ("she", 0), ("we", 0), ("you", 0), ("i", 0), ("them", 0),
    ("him", 0), ("her", 0), ("us", 1), ("me", 1), ("my", 1), ("your", 1),
    ("our", 1), ("these", 0), ("those", 0), ("them", 0), ("itself", 2),
    ("himself", 2), ("herself", 2), ("themselves", 2), ("ourselves", 3),
    ("one", 0), ("two", 0), ("three", 1), ("four", 1), ("five", 1),
    ("six", 1), ("seven", 1), ("eight", 1), ("nine", 1), ("ten", 1),
    ("eleven", 3), ("twelve", 2), ("twenty", 2), ("thirty", 2), ("forty", 3),
    ("fifty", 2), ("sixty", 3), ("seventy", 3), ("eighty", 3), ("ninety", 3),
    ("hundred", 1), ("thousand", 1), ("million", 1), ("billion", 2),
    ("first", 0), ("second", 1), ("third", 1), ("fourth", 2), ("fifth", 2),
    ("sixth", 3), ("seventh", 3), ("eighth", 3), ("ninth", 3), ("tenth", 3),
    ("last", 1), ("next", 1), ("may", 1), ("might", 1), ("must", 1),
    ("shall", 2), ("should", 1), ("do", 0), ("does", 1), ("did", 0),
    ("done", 1), ("no", 0), ("nor", 2), ("if", 0), ("whether", 2),
    ("unless", 2), ("despite", 2), ("per", 2), ("via", 2), ("amid", 4),
    ("whose", 2), ("whom", 2), ("none", 2), ("anyone", 2), ("everyone", 2),
    ("someone", 2), ("nothing", 1), ("something", 1), ("everything", 2),
    ("anything", 2), ("nobody", 3), ("somebody", 3), ("everybody", 3),
    ("somewhat", 3), ("somehow", 3), ("anywhere", 3), ("everywhere", 3),
    ("somewhere", 3), ("nowhere", 3), ("whenever", 3), ("wherever", 3),
    ("whatever", 2), ("whichever", 4), ("thus", 2), ("hence", 3),
    ("indeed", 2), ("nevertheless", 3), ("nonetheless", 4), ("besides", 3),
    ("furthermore", 3), ("otherwise", 2), ("likewise", 4), ("anyway", 3),
]

# --- nouns ----------------------------------------------------------------

NOUNS = [
    # time
    ("time", 0, "s"), ("year", 0, "s"), ("day", 0, "s"), ("week", 1, "s"),
    ("month", 1, "s"), ("hour", 1, "s"), ("minute", 1, "s"), ("moment", 1, "s"),
    ("decade", 2, "s"), ("century", 1, "s"), ("season", 2, "s"), ("period", 1, "s"),
    ("morning", 1, "s"), ("evening", 1, "s"), ("afternoon", 2, "s"), ("night", 1, "s"),
    ("midnight", 3, "-"), ("noon", 3, "-"), ("dawn", 3, "s"), ("dusk", 4, "-"),
    ("spring", 2, "s"), ("summer", 2, "s"), ("autumn", 3, "s"), ("winter", 2, "s"),
    ("holiday", 2, "s"), ("anniversary", 3, "anniversaries"), ("era", 3, "s"),
    ("deadline", 3, "s"), ("schedule", 2, "s"), ("calendar", 3, "s"),
    ("generation", 2, "s"), ("future", 1, "s"), ("past", 1, "-"), ("present", 1, "s"),
    # people and family
    ("people", 0, "-"), ("person", 1, "people"), ("man", 0, "men"),
    ("woman", 1, "women"), ("child", 1, "children"), ("family", 1, "families"),
    ("friend", 1, "s"), ("neighbor", 2, "s"), ("parent", 1, "s"), ("mother", 1, "s"),
    ("father", 1, "s"), ("brother", 2, "s"), ("sister", 2, "s"), ("son", 1, "s"),
    ("daughter", 2, "s"), ("uncle", 3, "s"), ("aunt", 3, "s"), ("cousin", 3, "s"),
    ("husband", 2, "s"), ("wife", 2, "wives"), ("baby", 2, "babies"),
    ("boy", 1, "s"), ("girl", 1, "s"), ("adult", 2, "s"), ("youth", 2, "s"),
    ("crowd", 2, "s"), ("guest", 2, "s"), ("stranger", 3, "s"), ("couple", 2, "s"),
    ("citizen", 2, "s"), ("resident", 2, "s"), ("visitor", 2, "s"),
    ("volunteer", 2, "s"), ("audience", 2, "s"), ("member", 1, "s"),
    ("leader", 1, "s"), ("owner", 2, "s"), ("partner", 2, "s"), ("rival", 3, "s"),
    ("witness", 2, "es"), ("victim", 2, "s"), ("hero", 2, "heroes"),
    ("celebrity", 3, "celebrities"), ("champion", 2, "s"), ("pioneer", 3, "s"),
    ("founder", 2, "s"), ("ancestor", 3, "s"), ("descendant", 4, "s"),
    # professions
    ("teacher", 1, "s"), ("student", 1, "s"), ("doctor", 1, "s"),
    ("nurse", 2, "s"), ("lawyer", 2, "s"), ("judge", 2, "s"), ("farmer", 2, "s"),
    ("worker", 1, "s"), ("engineer", 2, "s"), ("scientist", 2, "s"),
    ("artist", 2, "s"), ("writer", 2, "s"), ("author", 2, "s"), ("poet", 3, "s"),
    ("painter", 3, "s"), ("musician", 2, "s"), ("singer", 2, "s"),
    ("actor", 2, "s"), ("director", 2, "s"), ("manager", 2, "s"),
    ("driver", 2, "s"), ("pilot", 3, "s"), ("sailor", 3, "s"), ("soldier", 2, "s"),
    ("officer", 1, "s"), ("guard", 2, "s"), ("captain", 2, "s"),
    ("general", 2, "s"), ("president", 1, "s"), ("minister", 2, "s"),
    ("governor", 2, "s"), ("mayor", 2, "s"), ("senator", 3, "s"),
    ("secretary", 2, "secretaries"), ("professor", 2, "s"), ("researcher", 2, "s"),
    ("historian", 3, "s"), ("architect", 3, "s"), ("designer", 2, "s"),
    ("builder", 3, "s"), ("carpenter", 4, "s"), ("blacksmith", 4, "s"),
    ("merchant", 3, "s"), ("trader", 3, "s"), ("banker", 3, "s"),
    ("baker", 3, "s"), ("butcher", 4, "s"), ("chef", 3, "s"), ("waiter", 3, "s"),
    ("clerk", 3, "s"), ("librarian", 4, "s"), ("surgeon", 3, "s"),
    ("dentist", 4, "s"), ("veterinarian", 4, "s"), ("journalist", 3, "s"),
    ("reporter", 2, "s"), ("editor", 2, "s"), ("photographer", 3, "s"),
    ("athlete", 3, "s"), ("coach", 3, "es"), ("referee", 4, "s"),
    ("fisherman", 4, "fishermen"), ("hunter", 3, "s"), ("miner", 3, "s"),
    ("shepherd", 4, "s"), ("tailor", 4, "s"), ("plumber", 4, "s"),
    ("electrician", 4, "s"), ("mechanic", 3, "s"), ("astronaut", 4, "s"),
    ("detective", 3, "s"), ("spy", 4, "spies"), ("priest", 3, "s"),
    ("monk", 4, "s"), ("king", 1, "s"), ("queen", 2, "s"), ("prince", 2, "s"),
    ("princess", 3, "es"), ("emperor", 3, "s"), ("duke", 3, "s"),
    ("knight", 3, "s"), ("servant", 3, "s"), ("slave", 3, "s"),
    ("expert", 2, "s"), ("specialist", 3, "s"), ("assistant", 2, "s"),
    ("employee", 2, "s"), ("employer", 3, "s"), ("colleague", 3, "s"),
    ("candidate", 2, "s"), ("customer", 2, "s"), ("client", 2, "s"),
    ("passenger", 2, "s"), ("tourist", 3, "s"), ("traveler", 3, "s"),
    # body and health
    ("body", 1, "bodies"), ("head", 1, "s"), ("face", 1, "s"), ("eye", 1, "s"),
    ("ear", 2, "s"), ("nose", 2, "s"), ("mouth", 2, "s"), ("tooth", 3, "teeth"),
    ("tongue", 3, "s"), ("hair", 2, "s"), ("hand", 1, "s"), ("arm", 1, "s"),
    ("leg", 2, "s"), ("foot", 1, "feet"), ("finger", 2, "s"), ("thumb", 4, "s"),
    ("shoulder", 2, "s"), ("knee", 3, "s"), ("elbow", 4, "s"), ("neck", 2, "s"),
    ("chest", 3, "s"), ("back", 1, "s"), ("skin", 2, "s"), ("bone", 2, "s"),
    ("blood", 1, "-"), ("heart", 1, "s"), ("brain", 2, "s"), ("lung", 3, "s"),
    ("stomach", 3, "s"), ("muscle", 3, "s"), ("nerve", 3, "s"), ("voice", 1, "s"),
    ("breath", 3, "s"), ("health", 1, "-"), ("disease", 1, "s"),
    ("illness", 3, "es"), ("injury", 2, "injuries"), ("wound", 3, "s"),
    ("pain", 2, "s"), ("fever", 3, "s"), ("medicine", 2, "s"), ("drug", 2, "s"),
    ("vaccine", 3, "s"), ("treatment", 2, "s"), ("therapy", 3, "therapies"),
    ("surgery", 3, "surgeries"), ("patient", 1, "s"), ("hospital", 1, "s"),
    ("clinic", 3, "s"), ("pharmacy", 4, "pharmacies"), ("diet", 3, "s"),
    ("exercise", 2, "s"), ("sleep", 2, "-"), ("dream", 2, "s"),
    # nature and geography
    ("world", 0, "s"), ("earth", 1, "-"), ("land", 1, "s"), ("ground", 1, "s"),
    ("soil", 2, "s"), ("rock", 2, "s"), ("stone", 2, "s"), ("sand", 2, "s"),
    ("dust", 3, "-"), ("mud", 3, "-"), ("clay", 3, "-"), ("mountain", 1, "s"),
    ("hill", 2, "s"), ("valley", 2, "s"), ("cliff", 3, "s"), ("cave", 3, "s"),
    ("desert", 2, "s"), ("forest", 1, "s"), ("wood", 2, "s"), ("jungle", 4, "s"),
    ("field", 1, "s"), ("meadow", 4, "s"), ("plain", 3, "s"), ("prairie", 4, "s"),
    ("swamp", 4, "s"), ("island", 1, "s"), ("peninsula", 4, "s"),
    ("continent", 3, "s"), ("coast", 2, "s"), ("shore", 3, "s"), ("beach", 2, "es"),
    ("cape", 4, "s"), ("bay", 2, "s"), ("gulf", 3, "s"), ("sea", 1, "s"),
    ("ocean", 2, "s"), ("lake", 1, "s"), ("river", 1, "s"), ("stream", 2, "s"),
    ("creek", 3, "s"), ("pond", 3, "s"), ("waterfall", 4, "s"), ("spring", 2, "s"),
    ("glacier", 4, "s"), ("volcano", 3, "volcanoes"), ("earthquake", 3, "s"),
    ("flood", 3, "s"), ("drought", 3, "s"), ("landscape", 3, "s"),
    ("horizon", 3, "s"), ("border", 2, "s"), ("region", 1, "s"), ("area", 0, "s"),
    ("zone", 2, "s"), ("territory", 2, "territories"), ("environment", 1, "s"),
    ("climate", 2, "s"), ("habitat", 3, "s"), ("wilderness", 4, "-"),
    ("nature", 1, "-"), ("scenery", 4, "-"), ("countryside", 3, "-"),
    # weather and sky
    ("weather", 1, "-"), ("sky", 1, "skies"), ("sun", 1, "s"), ("moon", 2, "s"),
    ("star", 1, "s"), ("planet", 2, "s"), ("comet", 4, "s"), ("cloud", 2, "s"),
    ("rain", 1, "s"), ("snow", 2, "s"), ("ice", 2, "s"), ("frost", 4, "s"),
    ("fog", 3, "s"), ("mist", 4, "s"), ("wind", 1, "s"), ("storm", 2, "s"),
    ("thunder", 3, "-"), ("lightning", 3, "-"), ("rainbow", 4, "s"),
    ("sunshine", 4, "-"), ("sunlight", 3, "-"), ("shadow", 2, "s"),
    ("temperature", 2, "s"), ("heat", 2, "-"), ("humidity", 4, "-"),
    ("breeze", 4, "s"), ("hurricane", 3, "s"), ("tornado", 4, "tornadoes"),
    ("blizzard", 4, "s"), ("hail", 4, "-"), ("dew", 4, "-"),
    # animals and plants
    ("animal", 1, "s"), ("bird", 1, "s"), ("fish", 1, "-"), ("insect", 3, "s"),
    ("dog", 1, "s"), ("cat", 1, "s"), ("horse", 1, "s"), ("cow", 2, "s"),
    ("sheep", 2, "-"), ("goat", 3, "s"), ("pig", 3, "s"), ("chicken", 2, "s"),
    ("duck", 3, "s"), ("goose", 4, "geese"), ("rabbit", 3, "s"), ("mouse", 3, "mice"),
    ("rat", 3, "s"), ("squirrel", 4, "s"), ("deer", 3, "-"), ("bear", 2, "s"),
    ("wolf", 3, "wolves"), ("fox", 3, "es"), ("lion", 2, "s"), ("tiger", 3, "s"),
    ("elephant", 3, "s"), ("monkey", 3, "s"), ("camel", 4, "s"), ("whale", 3, "s"),
    ("dolphin", 4, "s"), ("shark", 3, "s"), ("snake", 3, "s"), ("lizard", 4, "s"),
    ("turtle", 4, "s"), ("frog", 4, "s"), ("bee", 3, "s"), ("ant", 3, "s"),
    ("fly", 3, "flies"), ("spider", 3, "s"), ("butterfly", 4, "butterflies"),
    ("worm", 4, "s"), ("eagle", 3, "s"), ("hawk", 4, "s"), ("owl", 4, "s"),
    ("crow", 4, "s"), ("pigeon", 4, "s"), ("sparrow", 4, "s"), ("swan", 4, "s"),
    ("plant", 1, "s"), ("tree", 1, "s"), ("flower", 2, "s"), ("grass", 2, "es"),
    ("leaf", 2, "leaves"), ("root", 2, "s"), ("branch", 2, "es"), ("trunk", 4, "s"),
    ("seed", 2, "s"), ("fruit", 2, "s"), ("berry", 3, "berries"),
    ("mushroom", 4, "s"), ("moss", 4, "es"), ("fern", 4, "s"), ("vine", 4, "s"),
    ("oak", 3, "s"), ("pine", 3, "s"), ("maple", 4, "s"), ("cedar", 4, "s"),
    ("willow", 4, "s"), ("rose", 3, "s"), ("tulip", 4, "s"), ("daisy", 4, "daisies"),
    ("crop", 2, "s"), ("harvest", 3, "s"), ("wheat", 3, "-"), ("corn", 3, "-"),
    ("rice", 2, "-"), ("barley", 4, "-"), ("cotton", 3, "-"), ("herd", 3, "s"),
    ("flock", 4, "s"), ("nest", 3, "s"), ("feather", 3, "s"), ("fur", 3, "s"),
    ("tail", 3, "s"), ("wing", 2, "s"), ("horn", 3, "s"), ("claw", 4, "s"),
    ("paw", 4, "s"), ("hoof", 4, "hooves"), ("shell", 3, "s"), ("scale", 2, "s"),
    # food and drink
    ("food", 1, "s"), ("meal", 2, "s"), ("breakfast", 2, "s"), ("lunch", 2, "es"),
    ("dinner", 2, "s"), ("supper", 4, "s"), ("bread", 2, "s"), ("butter", 3, "-"),
    ("cheese", 2, "s"), ("milk", 2, "-"), ("cream", 3, "s"), ("egg", 2, "s"),
    ("meat", 2, "s"), ("beef", 3, "-"), ("pork", 4, "-"), ("bacon", 4, "-"),
    ("sausage", 4, "s"), ("soup", 3, "s"), ("salad", 3, "s"), ("sauce", 3, "s"),
    ("pepper", 3, "s"), ("salt", 2, "s"), ("sugar", 2, "s"), ("honey", 3, "-"),
    ("flour", 4, "-"), ("oil", 2, "s"), ("vinegar", 4, "-"), ("spice", 3, "s"),
    ("cake", 2, "s"), ("pie", 3, "s"), ("cookie", 3, "s"), ("pastry", 4, "pastries"),
    ("chocolate", 2, "s"), ("candy", 3, "candies"), ("caramel", 3, "s"),
    ("dessert", 3, "s"), ("apple", 2, "s"), ("orange", 2, "s"), ("banana", 3, "s"),
    ("grape", 3, "s"), ("lemon", 3, "s"), ("cherry", 3, "cherries"),
    ("peach", 4, "es"), ("pear", 4, "s"), ("plum", 4, "s"), ("melon", 4, "s"),
    ("potato", 3, "potatoes"), ("tomato", 3, "tomatoes"), ("onion", 3, "s"),
    ("carrot", 3, "s"), ("bean", 3, "s"), ("pea", 4, "s"), ("cabbage", 4, "s"),
    ("lettuce", 4, "-"), ("garlic", 4, "-"), ("nut", 3, "s"), ("almond", 4, "s"),
    ("coffee", 2, "s"), ("tea", 2, "s"), ("juice", 3, "s"), ("wine", 2, "s"),
    ("beer", 3, "s"), ("water", 1, "s"), ("drink", 2, "s"), ("feast", 4, "s"),
    ("recipe", 3, "s"), ("flavor", 3, "s"), ("taste", 2, "s"), ("hunger", 4, "-"),
    ("thirst", 4, "-"), ("kitchen", 2, "s"), ("oven", 4, "s"), ("stove", 4, "s"),
    ("plate", 3, "s"), ("bowl", 3, "s"), ("cup", 2, "s"), ("glass", 2, "es"),
    ("bottle", 2, "s"), ("jar", 4, "s"), ("spoon", 4, "s"), ("fork", 4, "s"),
    ("knife", 3, "knives"), ("napkin", 4, "s"), ("tray", 4, "s"),
    # buildings and city
    ("city", 0, "cities"), ("town", 1, "s"), ("village", 2, "s"),
    ("capital", 2, "s"), ("suburb", 4, "s"), ("district", 2, "s"),
    ("neighborhood", 3, "s"), ("street", 1, "s"), ("road", 1, "s"),
    ("avenue", 3, "s"), ("lane", 3, "s"), ("alley", 4, "s"), ("highway", 2, "s"),
    ("bridge", 2, "s"), ("tunnel", 3, "s"), ("square", 2, "s"), ("park", 1, "s"),
    ("garden", 2, "s"), ("playground", 4, "s"), ("fountain", 4, "s"),
    ("statue", 3, "s"), ("monument", 3, "s"), ("building", 1, "s"),
    ("house", 0, "s"), ("home", 1, "s"), ("apartment", 2, "s"),
    ("cottage", 4, "s"), ("cabin", 4, "s"), ("mansion", 4, "s"), ("hut", 4, "s"),
    ("tent", 3, "s"), ("palace", 3, "s"), ("castle", 3, "s"), ("tower", 2, "s"),
    ("wall", 1, "s"), ("gate", 2, "s"), ("fence", 3, "s"), ("roof", 3, "s"),
    ("floor", 2, "s"), ("ceiling", 3, "s"), ("window", 1, "s"), ("door", 1, "s"),
    ("stair", 3, "s"), ("staircase", 4, "s"), ("balcony", 4, "balconies"),
    ("porch", 4, "es"), ("chimney", 4, "s"), ("basement", 3, "s"),
    ("attic", 4, "s"), ("garage", 3, "s"), ("yard", 3, "s"), ("room", 1, "s"),
    ("hall", 2, "s"), ("corridor", 4, "s"), ("office", 1, "s"),
    ("school", 0, "s"), ("college", 1, "s"), ("university", 1, "universities"),
    ("library", 1, "libraries"), ("museum", 2, "s"), ("gallery", 3, "galleries"),
    ("theater", 2, "s"), ("cinema", 4, "s"), ("stadium", 3, "s"),
    ("arena", 4, "s"), ("church", 1, "es"), ("cathedral", 3, "s"),
    ("temple", 3, "s"), ("chapel", 4, "s"), ("mosque", 4, "s"),
    ("factory", 2, "factories"), ("mill", 3, "s"), ("warehouse", 3, "s"),
    ("workshop", 3, "s"), ("store", 1, "s"), ("shop", 2, "s"),
    ("market", 1, "s"), ("mall", 4, "s"), ("bakery", 4, "bakeries"),
    ("restaurant", 2, "s"), ("cafe", 4, "s"), ("hotel", 2, "s"), ("inn", 4, "s"),
    ("bank", 1, "s"), ("station", 1, "s"), ("airport", 2, "s"),
    ("harbor", 3, "s"), ("port", 2, "s"), ("dock", 4, "s"), ("pier", 4, "s"),
    ("farm", 2, "s"), ("barn", 4, "s"), ("stable", 4, "s"), ("well", 2, "s"),
    ("mine", 3, "s"), ("quarry", 4, "quarries"), ("prison", 3, "s"),
    ("courthouse", 4, "s"), ("embassy", 4, "embassies"), ("lighthouse", 4, "s"),
    ("windmill", 4, "s"), ("ruin", 3, "s"), ("site", 1, "s"), ("place", 0, "s"),
    ("location", 2, "s"), ("address", 2, "es"), ("entrance", 3, "s"),
    ("exit", 3, "s"), ("corner", 2, "s"), ("crossing", 3, "s"),
    # transport
    ("car", 1, "s"), ("truck", 2, "s"), ("bus", 2, "es"), ("train", 1, "s"),
    ("tram", 4, "s"), ("subway", 4, "s"), ("taxi", 4, "s"), ("bicycle", 3, "s"),
    ("bike", 3, "s"), ("motorcycle", 4, "s"), ("ship", 2, "s"), ("boat", 2, "s"),
    ("ferry", 4, "ferries"), ("canoe", 4, "s"), ("yacht", 4, "s"),
    ("raft", 4, "s"), ("sail", 3, "s"), ("anchor", 4, "s"), ("deck", 3, "s"),
    ("cargo", 3, "-"), ("plane", 2, "s"), ("airplane", 3, "s"), ("jet", 3, "s"),
    ("helicopter", 3, "s"), ("rocket", 3, "s"), ("satellite", 3, "s"),
    ("engine", 2, "s"), ("motor", 3, "s"), ("wheel", 2, "s"), ("tire", 4, "s"),
    ("brake", 4, "s"), ("fuel", 2, "s"), ("gasoline", 4, "-"), ("wagon", 4, "s"),
    ("cart", 4, "s"), ("carriage", 4, "s"), ("sled", 4, "s"), ("journey", 2, "s"),
    ("trip", 2, "s"), ("voyage", 3, "s"), ("route", 2, "s"), ("path", 2, "s"),
    ("trail", 3, "s"), ("track", 2, "s"), ("traffic", 2, "-"), ("ticket", 2, "s"),
    ("luggage", 4, "-"), ("passport", 4, "s"), ("map", 2, "s"),
    ("compass", 4, "es"), ("distance", 2, "s"), ("speed", 2, "s"),
    ("arrival", 3, "s"), ("departure", 3, "s"), ("destination", 3, "s"),
    # objects and materials
    ("thing", 0, "s"), ("object", 2, "s"), ("item", 2, "s"), ("tool", 2, "s"),
    ("machine", 1, "s"), ("device", 2, "s"), ("instrument", 2, "s"),
    ("equipment", 2, "-"), ("hammer", 3, "s"), ("nail", 3, "s"),
    ("screw", 4, "s"), ("saw", 3, "s"), ("axe", 4, "s"), ("shovel", 4, "s"),
    ("ladder", 4, "s"), ("rope", 3, "s"), ("chain", 2, "s"), ("wire", 2, "s"),
    ("cable", 3, "s"), ("pipe", 3, "s"), ("tube", 3, "s"), ("tank", 3, "s"),
    ("pump", 3, "s"), ("valve", 4, "s"), ("lock", 3, "s"), ("key", 1, "s"),
    ("bell", 3, "s"), ("clock", 2, "s"), ("watch", 2, "es"), ("lamp", 3, "s"),
    ("candle", 3, "s"), ("torch", 4, "es"), ("lantern", 4, "s"),
    ("mirror", 3, "s"), ("frame", 2, "s"), ("box", 1, "es"), ("basket", 3, "s"),
    ("bag", 2, "s"), ("sack", 4, "s"), ("bucket", 4, "s"), ("barrel", 3, "s"),
    ("container", 3, "s"), ("package", 2, "s"), ("parcel", 4, "s"),
    ("gift", 2, "s"), ("toy", 3, "s"), ("doll", 4, "s"), ("ball", 2, "s"),
    ("table", 1, "s"), ("chair", 2, "s"), ("bench", 3, "es"), ("desk", 2, "s"),
    ("bed", 1, "s"), ("couch", 4, "es"), ("sofa", 4, "s"), ("shelf", 3, "shelves"),
    ("cupboard", 4, "s"), ("drawer", 4, "s"), ("closet", 4, "s"),
    ("carpet", 3, "s"), ("curtain", 3, "s"), ("blanket", 3, "s"),
    ("pillow", 4, "s"), ("towel", 4, "s"), ("soap", 4, "s"), ("brush", 3, "es"),
    ("comb", 4, "s"), ("razor", 4, "s"), ("scissors", 4, "-"),
    ("needle", 3, "s"), ("thread", 3, "s"), ("cloth", 3, "s"),
    ("fabric", 3, "s"), ("leather", 3, "-"), ("wool", 3, "-"), ("silk", 3, "-"),
    ("metal", 2, "s"), ("iron", 2, "s"), ("steel", 2, "-"), ("copper", 3, "-"),
    ("silver", 2, "-"), ("gold", 1, "-"), ("bronze", 3, "-"), ("lead", 2, "-"),
    ("tin", 4, "-"), ("zinc", 4, "-"), ("aluminum", 4, "-"), ("brass", 4, "-"),
    ("coal", 3, "-"), ("charcoal", 4, "-"), ("timber", 3, "-"),
    ("lumber", 4, "-"), ("brick", 3, "s"), ("cement", 4, "-"),
    ("concrete", 3, "-"), ("marble", 4, "-"), ("granite", 4, "-"),
    ("plastic", 3, "s"), ("rubber", 3, "-"), ("glue", 4, "-"), ("paint", 2, "s"),
    ("ink", 4, "s"), ("paper", 1, "s"), ("cardboard", 4, "-"), ("page", 1, "s"),
    ("book", 0, "s"), ("notebook", 4, "s"), ("journal", 2, "s"),
    ("magazine", 3, "s"), ("newspaper", 2, "s"), ("letter", 1, "s"),
    ("envelope", 4, "s"), ("stamp", 3, "s"), ("card", 2, "s"), ("pen", 3, "s"),
    ("pencil", 3, "s"), ("chalk", 4, "-"), ("crayon", 4, "s"),
    ("clothing", 3, "-"), ("clothes", 2, "-"), ("dress", 2, "es"),
    ("shirt", 3, "s"), ("coat", 2, "s"), ("jacket", 3, "s"), ("sweater", 4, "s"),
    ("trousers", 4, "-"), ("skirt", 4, "s"), ("hat", 2, "s"), ("cap", 3, "s"),
    ("helmet", 4, "s"), ("glove", 3, "s"), ("scarf", 4, "scarves"),
    ("belt", 3, "s"), ("button", 3, "s"), ("pocket", 3, "s"), ("shoe", 2, "s"),
    ("boot", 3, "s"), ("sock", 4, "s"), ("sandal", 4, "s"), ("uniform", 3, "s"),
    ("costume", 4, "s"), ("jewel", 4, "s"), ("ring", 2, "s"),
    ("necklace", 4, "s"), ("bracelet", 4, "s"), ("crown", 3, "s"),
    ("umbrella", 4, "s"), ("wallet", 4, "s"), ("purse", 4, "s"),
    # science and technology
    ("science", 1, "s"), ("technology", 1, "technologies"), ("research", 1, "-"),
    ("experiment", 2, "s"), ("laboratory", 3, "laboratories"), ("theory", 1, "theories"),
    ("hypothesis", 4, "hypotheses"), ("evidence", 1, "-"), ("discovery", 2, "discoveries"),
    ("invention", 3, "s"), ("innovation", 3, "s"), ("method", 1, "s"),
    ("technique", 2, "s"), ("process", 1, "es"), ("procedure", 2, "s"),
    ("analysis", 2, "analyses"), ("measurement", 3, "s"), ("observation", 2, "s"),
    ("calculation", 3, "s"), ("formula", 3, "s"), ("equation", 3, "s"),
    ("number", 0, "s"), ("figure", 1, "s"), ("digit", 4, "s"),
    ("fraction", 3, "s"), ("percentage", 3, "s"), ("ratio", 3, "s"),
    ("average", 2, "s"), ("sum", 3, "s"), ("total", 2, "s"), ("amount", 1, "s"),
    ("quantity", 2, "quantities"), ("unit", 2, "s"), ("degree", 2, "s"),
    ("measure", 2, "s"), ("length", 2, "s"), ("width", 3, "s"),
    ("height", 2, "s"), ("depth", 3, "s"), ("weight", 2, "s"), ("mass", 2, "es"),
    ("volume", 2, "s"), ("density", 3, "densities"), ("pressure", 2, "s"),
    ("energy", 1, "energies"), ("force", 1, "s"), ("power", 1, "s"),
    ("electricity", 3, "-"), ("magnet", 4, "s"), ("current", 2, "s"),
    ("voltage", 4, "s"), ("battery", 3, "batteries"), ("circuit", 3, "s"),
    ("signal", 2, "s"), ("frequency", 3, "frequencies"), ("wave", 2, "s"),
    ("radiation", 3, "-"), ("particle", 3, "s"), ("atom", 3, "s"),
    ("molecule", 3, "s"), ("element", 2, "s"), ("compound", 3, "s"),
    ("chemical", 2, "s"), ("oxygen", 3, "-"), ("hydrogen", 3, "-"),
    ("carbon", 3, "-"), ("nitrogen", 4, "-"), ("acid", 3, "s"), ("gas", 2, "es"),
    ("liquid", 3, "s"), ("solid", 3, "s"), ("crystal", 3, "s"),
    ("cell", 1, "s"), ("gene", 3, "s"), ("virus", 3, "es"),
    ("bacteria", 3, "-"), ("organism", 3, "s"), ("species", 1, "-"),
    ("evolution", 3, "-"), ("biology", 3, "-"), ("chemistry", 3, "-"),
    ("physics", 3, "-"), ("mathematics", 3, "-"), ("geometry", 4, "-"),
    ("algebra", 4, "-"), ("statistics", 3, "-"), ("astronomy", 4, "-"),
    ("geology", 4, "-"), ("geography", 3, "-"), ("telescope", 4, "s"),
    ("microscope", 4, "s"), ("computer", 1, "s"), ("software", 2, "-"),
    ("hardware", 4, "-"), ("program", 1, "s"), ("code", 2, "s"),
    ("data", 1, "-"), ("database", 3, "s"), ("network", 2, "s"),
    ("internet", 2, "-"), ("website", 3, "s"), ("server", 3, "s"),
    ("screen", 2, "s"), ("keyboard", 4, "s"), ("monitor", 3, "s"),
    ("printer", 4, "s"), ("camera", 2, "s"), ("photograph", 3, "s"),
    ("photo", 3, "s"), ("video", 2, "s"), ("radio", 2, "s"),
    ("television", 2, "s"), ("telephone", 3, "s"), ("phone", 2, "s"),
    ("message", 1, "s"), ("email", 3, "s"), ("file", 2, "s"),
    ("document", 2, "s"), ("record", 1, "s"), ("system", 0, "s"),
    ("model", 1, "s"), ("version", 2, "s"), ("pattern", 2, "s"),
    ("structure", 1, "s"), ("function", 1, "s"), ("feature", 2, "s"),
    ("detail", 1, "s"), ("sample", 2, "s"), ("test", 1, "s"),
    ("result", 0, "s"), ("effect", 1, "s"), ("cause", 1, "s"),
    ("source", 1, "s"), ("origin", 3, "s"), ("basis", 2, "bases"),
    ("principle", 2, "s"), ("rule", 1, "s"), ("standard", 2, "s"),
    ("definition", 2, "s"), ("example", 0, "s"), ("instance", 2, "s"),
    ("category", 2, "categories"), ("type", 1, "s"), ("kind", 1, "s"),
    ("form", 1, "s"), ("shape", 2, "s"), ("size", 1, "s"), ("color", 1, "s"),
    ("surface", 2, "s"), ("edge", 2, "s"), ("side", 1, "s"),
    ("center", 1, "s"), ("middle", 2, "s"), ("top", 1, "s"),
    ("bottom", 2, "s"), ("front", 1, "s"), ("end", 0, "s"),
    ("beginning", 2, "s"), ("point", 0, "s"), ("line", 0, "s"),
    ("curve", 3, "s"), ("angle", 2, "s"), ("circle", 2, "s"),
    ("triangle", 4, "s"), ("cube", 4, "s"), ("sphere", 4, "s"),
    ("column", 2, "s"), ("row", 2, "s"), ("layer", 2, "s"), ("level", 1, "s"),
    ("stage", 1, "s"), ("step", 1, "s"), ("phase", 2, "s"), ("cycle", 2, "s"),
    ("sequence", 3, "s"), ("series", 1, "-"), ("range", 1, "s"),
    ("limit", 2, "s"), ("scope", 3, "s"), ("scale", 2, "s"), ("rate", 1, "s"),
    ("value", 1, "s"), ("quality", 1, "qualities"), ("state", 0, "s"),
    ("condition", 1, "s"), ("status", 2, "es"), ("position", 1, "s"),
    ("space", 1, "s"), ("gap", 3, "s"), ("hole", 2, "s"), ("crack", 3, "s"),
    ("piece", 1, "s"), ("part", 0, "s"), ("portion", 3, "s"),
    ("section", 1, "s"), ("segment", 3, "s"), ("fragment", 4, "s"),
    ("component", 2, "s"), ("material", 1, "s"), ("substance", 3, "s"),
    ("mixture", 3, "s"), ("combination", 2, "s"), ("collection", 2, "s"),
    ("set", 1, "s"), ("group", 0, "s"), ("pair", 2, "s"), ("bundle", 4, "s"),
    ("stack", 3, "s"), ("pile", 3, "s"), ("heap", 4, "s"), ("mass", 2, "es"),
    # society, politics, economy
    ("government", 0, "s"), ("nation", 1, "s"), ("country", 0, "countries"),
    ("society", 1, "societies"), ("community", 1, "communities"),
    ("public", 1, "-"), ("population", 2, "s"), ("culture", 1, "s"),
    ("tradition", 2, "s"), ("custom", 3, "s"), ("religion", 2, "s"),
    ("faith", 2, "s"), ("belief", 2, "s"), ("language", 1, "s"),
    ("history", 0, "histories"), ("politics", 2, "-"), ("policy", 1, "policies"),
    ("law", 0, "s"), ("justice", 2, "-"), ("court", 1, "s"), ("trial", 2, "s"),
    ("crime", 2, "s"), ("criminal", 3, "s"), ("police", 1, "-"),
    ("prisoner", 3, "s"), ("punishment", 3, "s"), ("fine", 3, "s"),
    ("right", 0, "s"), ("freedom", 2, "s"), ("liberty", 3, "liberties"),
    ("duty", 2, "duties"), ("responsibility", 2, "responsibilities"),
    ("authority", 2, "authorities"), ("election", 2, "s"), ("vote", 2, "s"),
    ("voter", 3, "s"), ("campaign", 2, "s"), ("party", 1, "parties"),
    ("congress", 2, "es"), ("parliament", 2, "s"), ("council", 2, "s"),
    ("committee", 2, "s"), ("commission", 3, "s"), ("department", 1, "s"),
    ("ministry", 3, "ministries"), ("agency", 2, "agencies"),
    ("organization", 2, "s"), ("institution", 2, "s"), ("association", 3, "s"),
    ("union", 2, "s"), ("federation", 4, "s"), ("republic", 3, "s"),
    ("kingdom", 3, "s"), ("empire", 2, "s"), ("colony", 3, "colonies"),
    ("state", 0, "s"), ("province", 3, "s"), ("county", 2, "counties"),
    ("treaty", 3, "treaties"), ("agreement", 2, "s"), ("contract", 2, "s"),
    ("constitution", 3, "s"), ("amendment", 3, "s"), ("regulation", 3, "s"),
    ("reform", 3, "s"), ("revolution", 2, "s"), ("movement", 2, "s"),
    ("protest", 3, "s"), ("strike", 3, "s"), ("war", 0, "s"),
    ("battle", 2, "s"), ("army", 1, "armies"), ("navy", 3, "navies"),
    ("troop", 3, "s"), ("weapon", 2, "s"), ("gun", 2, "s"), ("sword", 3, "s"),
    ("shield", 4, "s"), ("arrow", 3, "s"), ("bow", 3, "s"), ("spear", 4, "s"),
    ("cannon", 4, "s"), ("bomb", 3, "s"), ("bullet", 3, "s"),
    ("defense", 2, "s"), ("attack", 2, "s"), ("invasion", 3, "s"),
    ("siege", 4, "s"), ("victory", 2, "victories"), ("defeat", 3, "s"),
    ("peace", 1, "-"), ("enemy", 2, "enemies"), ("ally", 3, "allies"),
    ("threat", 2, "s"), ("danger", 2, "s"), ("risk", 2, "s"),
    ("security", 2, "-"), ("safety", 2, "-"), ("emergency", 2, "emergencies"),
    ("disaster", 3, "s"), ("accident", 2, "s"), ("rescue", 3, "s"),
    ("economy", 1, "economies"), ("money", 0, "-"), ("cash", 3, "-"),
    ("coin", 3, "s"), ("currency", 3, "currencies"), ("dollar", 1, "s"),
    ("price", 1, "s"), ("cost", 1, "s"), ("expense", 3, "s"),
    ("budget", 2, "s"), ("tax", 1, "es"), ("income", 2, "s"),
    ("salary", 3, "salaries"), ("wage", 3, "s"), ("profit", 2, "s"),
    ("loss", 2, "es"), ("debt", 2, "s"), ("loan", 3, "s"), ("credit", 2, "s"),
    ("interest", 1, "s"), ("investment", 2, "s"), ("investor", 3, "s"),
    ("fund", 2, "s"), ("capital", 2, "s"), ("wealth", 3, "-"),
    ("fortune", 3, "s"), ("property", 1, "properties"), ("estate", 3, "s"),
    ("asset", 3, "s"), ("insurance", 3, "-"), ("pension", 4, "s"),
    ("business", 0, "es"), ("company", 0, "companies"), ("firm", 2, "s"),
    ("corporation", 3, "s"), ("industry", 1, "industries"),
    ("manufacturing", 3, "-"), ("production", 2, "s"), ("product", 1, "s"),
    ("goods", 2, "-"), ("service", 1, "s"), ("trade", 1, "s"),
    ("commerce", 4, "-"), ("export", 3, "s"), ("import", 3, "s"),
    ("supply", 2, "supplies"), ("demand", 2, "s"), ("sale", 2, "s"),
    ("purchase", 3, "s"), ("deal", 2, "s"), ("bargain", 4, "s"),
    ("auction", 4, "s"), ("brand", 3, "s"), ("advertisement", 4, "s"),
    ("job", 1, "s"), ("work", 0, "s"), ("labor", 2, "s"), ("task", 2, "s"),
    ("career", 2, "s"), ("profession", 3, "s"), ("skill", 2, "s"),
    ("talent", 3, "s"), ("experience", 1, "s"), ("training", 2, "-"),
    ("practice", 1, "s"), ("effort", 1, "s"), ("attempt", 2, "s"),
    ("success", 1, "es"), ("failure", 2, "s"), ("achievement", 3, "s"),
    ("progress", 2, "-"), ("development", 1, "s"), ("growth", 2, "-"),
    ("improvement", 3, "s"), ("decline", 3, "s"), ("crisis", 2, "crises"),
    ("problem", 0, "s"), ("issue", 1, "s"), ("matter", 1, "s"),
    ("question", 0, "s"), ("answer", 1, "s"), ("solution", 2, "s"),
    ("decision", 1, "s"), ("choice", 1, "s"), ("option", 2, "s"),
    ("opportunity", 2, "opportunities"), ("chance", 1, "s"),
    ("situation", 1, "s"), ("circumstance", 3, "s"), ("case", 0, "s"),
    ("event", 1, "s"), ("incident", 3, "s"), ("occasion", 3, "s"),
    ("ceremony", 3, "ceremonies"), ("festival", 3, "s"), ("celebration", 3, "s"),
    ("wedding", 3, "s"), ("funeral", 4, "s"), ("meeting", 1, "s"),
    ("conference", 2, "s"), ("session", 2, "s"), ("debate", 2, "s"),
    ("discussion", 2, "s"), ("conversation", 2, "s"), ("interview", 2, "s"),
    ("speech", 2, "es"), ("lecture", 3, "s"), ("announcement", 3, "s"),
    ("statement", 1, "s"), ("report", 0, "s"), ("review", 2, "s"),
    ("survey", 3, "s"), ("study", 1, "studies"), ("article", 1, "s"),
    ("essay", 3, "s"), ("story", 1, "stories"), ("novel", 2, "s"),
    ("poem", 3, "s"), ("tale", 3, "s"), ("legend", 3, "s"), ("myth", 3, "s"),
    ("chapter", 2, "s"), ("paragraph", 3, "s"), ("sentence", 2, "s"),
    ("word", 0, "s"), ("phrase", 3, "s"), ("term", 1, "s"), ("name", 0, "s"),
    ("title", 1, "s"), ("label", 3, "s"), ("symbol", 3, "s"),
    ("sign", 1, "s"), ("mark", 2, "s"), ("note", 1, "s"), ("list", 1, "s"),
    ("summary", 3, "summaries"), ("description", 2, "s"),
    ("explanation", 3, "s"), ("instruction", 3, "s"), ("direction", 2, "s"),
    ("guide", 2, "s"), ("manual", 3, "s"), ("plan", 1, "s"),
    ("project", 1, "s"), ("proposal", 2, "s"), ("scheme", 3, "s"),
    ("strategy", 2, "strategies"), ("goal", 1, "s"), ("target", 2, "s"),
    ("purpose", 1, "s"), ("aim", 2, "s"), ("objective", 3, "s"),
    ("mission", 2, "s"), ("vision", 2, "s"), ("idea", 0, "s"),
    ("thought", 1, "s"), ("concept", 2, "s"), ("notion", 4, "s"),
    ("opinion", 2, "s"), ("view", 1, "s"), ("perspective", 3, "s"),
    ("attitude", 3, "s"), ("impression", 3, "s"), ("feeling", 1, "s"),
    ("emotion", 3, "s"), ("mood", 3, "s"), ("memory", 2, "memories"),
    ("mind", 1, "s"), ("attention", 1, "-"), ("interest", 1, "s"),
    ("curiosity", 4, "-"), ("knowledge", 1, "-"), ("wisdom", 3, "-"),
    ("intelligence", 3, "-"), ("reason", 1, "s"), ("logic", 3, "-"),
    ("argument", 2, "s"), ("claim", 2, "s"), ("fact", 0, "s"),
    ("truth", 1, "s"), ("lie", 3, "s"), ("secret", 2, "s"),
    ("mystery", 3, "mysteries"), ("puzzle", 4, "s"), ("clue", 4, "s"),
    ("hint", 4, "s"), ("suggestion", 3, "s"), ("advice", 2, "-"),
    ("recommendation", 3, "s"), ("warning", 2, "s"), ("promise", 2, "s"),
    ("offer", 2, "s"), ("request", 2, "s"), ("order", 1, "s"),
    ("command", 3, "s"), ("permission", 3, "-"), ("approval", 3, "-"),
    ("support", 1, "-"), ("help", 1, "-"), ("aid", 2, "-"),
    ("assistance", 3, "-"), ("protection", 2, "-"), ("care", 1, "-"),
    ("supervision", 4, "-"), ("control", 1, "s"), ("management", 2, "-"),
    ("leadership", 3, "-"), ("influence", 2, "s"), ("impact", 2, "s"),
    ("pressure", 2, "s"), ("stress", 3, "es"), ("tension", 3, "s"),
    ("conflict", 2, "s"), ("dispute", 3, "s"), ("competition", 2, "s"),
    ("contest", 3, "s"), ("race", 1, "s"), ("game", 1, "s"),
    ("match", 2, "es"), ("tournament", 3, "s"), ("league", 3, "s"),
    ("team", 1, "s"), ("club", 2, "s"), ("player", 1, "s"),
    ("score", 2, "s"), ("goal", 1, "s"), ("prize", 2, "s"),
    ("award", 2, "s"), ("medal", 3, "s"), ("trophy", 4, "trophies"),
    ("reward", 3, "s"), ("honor", 2, "s"), ("fame", 3, "-"),
    ("reputation", 3, "s"), ("respect", 2, "-"), ("pride", 3, "-"),
    ("courage", 3, "-"), ("fear", 1, "s"), ("hope", 1, "s"),
    ("desire", 2, "s"), ("wish", 2, "es"), ("passion", 3, "s"),
    ("love", 1, "s"), ("joy", 3, "s"), ("happiness", 3, "-"),
    ("pleasure", 3, "s"), ("comfort", 3, "s"), ("sorrow", 4, "s"),
    ("grief", 4, "-"), ("anger", 3, "-"), ("rage", 4, "-"),
    ("surprise", 2, "s"), ("shock", 3, "s"), ("relief", 3, "-"),
    ("doubt", 2, "s"), ("worry", 3, "worries"), ("anxiety", 3, "anxieties"),
    ("trouble", 2, "s"), ("difficulty", 2, "difficulties"),
    ("challenge", 2, "s"), ("obstacle", 4, "s"), ("barrier", 3, "s"),
    ("burden", 4, "s"), ("damage", 2, "s"), ("harm", 3, "-"),
    ("destruction", 3, "-"), ("violence", 2, "-"), ("noise", 2, "s"),
    ("sound", 1, "s"), ("silence", 3, "s"), ("music", 1, "-"),
    ("song", 1, "s"), ("melody", 4, "melodies"), ("rhythm", 4, "s"),
    ("tune", 4, "s"), ("concert", 3, "s"), ("orchestra", 4, "s"),
    ("band", 2, "s"), ("choir", 4, "s"), ("drum", 4, "s"),
    ("guitar", 3, "s"), ("piano", 3, "s"), ("violin", 4, "s"),
    ("flute", 4, "s"), ("trumpet", 4, "s"), ("dance", 2, "s"),
    ("art", 1, "s"), ("painting", 2, "s"), ("drawing", 3, "s"),
    ("sculpture", 4, "s"), ("portrait", 4, "s"), ("image", 1, "s"),
    ("picture", 1, "s"), ("scene", 2, "s"), ("style", 2, "s"),
    ("fashion", 3, "s"), ("design", 1, "s"), ("beauty", 2, "beauties"),
    ("education", 1, "-"), ("lesson", 2, "s"), ("course", 1, "s"),
    ("class", 1, "es"), ("grade", 2, "s"), ("exam", 3, "s"),
    ("examination", 4, "s"), ("assignment", 3, "s"), ("homework", 4, "-"),
    ("subject", 1, "s"), ("topic", 2, "s"), ("theme", 3, "s"),
    ("degree", 2, "s"), ("diploma", 4, "s"), ("certificate", 3, "s"),
    ("scholarship", 4, "s"), ("campus", 4, "es"), ("classroom", 3, "s"),
    ("textbook", 4, "s"), ("dictionary", 3, "dictionaries"),
    ("alphabet", 4, "s"), ("grammar", 4, "-"), ("spelling", 4, "s"),
    ("translation", 3, "s"), ("sport", 2, "s"), ("football", 2, "-"),
    ("baseball", 3, "-"), ("basketball", 3, "-"), ("tennis", 3, "-"),
    ("golf", 3, "-"), ("hockey", 4, "-"), ("swimming", 3, "-"),
    ("running", 3, "-"), ("cycling", 4, "-"), ("climbing", 4, "-"),
    ("fishing", 3, "-"), ("hunting", 3, "-"), ("camping", 4, "-"),
    ("hiking", 4, "-"), ("vacation", 3, "s"), ("leisure", 4, "-"),
    ("hobby", 4, "hobbies"), ("entertainment", 3, "-"), ("fun", 2, "-"),
    ("humor", 4, "-"), ("joke", 3, "s"), ("laughter", 4, "-"),
    ("smile", 2, "s"), ("tear", 3, "s"), ("glance", 4, "s"),
    ("gesture", 4, "s"), ("manner", 2, "s"), ("behavior", 2, "s"),
    ("habit", 3, "s"), ("routine", 3, "s"), ("lifestyle", 4, "s"),
    ("relationship", 2, "s"), ("marriage", 2, "s"), ("friendship", 3, "s"),
    ("communication", 2, "s"), ("contact", 2, "s"), ("connection", 2, "s"),
    ("link", 2, "s"), ("bond", 3, "s"), ("network", 2, "s"),
    ("channel", 2, "s"), ("medium", 3, "media"), ("press", 2, "es"),
    ("broadcast", 3, "s"), ("audience", 2, "s"), ("viewer", 3, "s"),
    ("reader", 2, "s"), ("listener", 3, "s"), ("speaker", 2, "s"),
    ("visitor", 2, "s"), ("host", 2, "s"), ("crew", 3, "s"),
    ("staff", 2, "s"), ("board", 1, "s"), ("panel", 3, "s"),
    ("jury", 3, "juries"), ("generation", 2, "s"), ("century", 1, "s"),
]

# --- verbs ----------------------------------------------------------------

VERBS = [
    ("be", 0, "was:been:being:is"), ("have", 0, "had:had:having:has"),
    ("do", 0, "did:done:doing:does"), ("say", 0, "said:said:saying:says"),
    ("go", 0, "went:gone:going:goes"), ("get", 0, "got:gotten:getting:gets"),
    ("make", 0, "made:made:making:makes"), ("know", 0, "knew:known:knowing:knows"),
    ("think", 0, "thought:thought:thinking:thinks"),
    ("take", 0, "took:taken:taking:takes"), ("see", 0, "saw:seen:seeing:sees"),
    ("come", 0, "came:come:coming:comes"), ("want", 1, "r"),
    ("look", 1, "r"), ("use", 0, "r"), ("find", 0, "found:found:finding:finds"),
    ("give", 0, "gave:given:giving:gives"), ("tell", 1, "told:told:telling:tells"),
    ("work", 0, "r"), ("call", 1, "r"), ("try", 1, "r"), ("ask", 1, "r"),
    ("need", 1, "r"), ("feel", 1, "felt:felt:feeling:feels"),
    ("become", 0, "became:become:becoming:becomes"),
    ("leave", 1, "left:left:leaving:leaves"), ("put", 1, "put:put:putting:puts"),
    ("mean", 1, "meant:meant:meaning:means"),
    ("keep", 1, "kept:kept:keeping:keeps"), ("let", 1, "let:let:letting:lets"),
    ("begin", 1, "began:begun:beginning:begins"),
    ("seem", 1, "r"), ("show", 0, "showed:shown:showing:shows"),
    ("hear", 1, "heard:heard:hearing:hears"), ("play", 1, "r"),
    ("run", 1, "ran:run:running:runs"), ("move", 1, "r"), ("live", 1, "r"),
    ("believe", 1, "r"), ("hold", 1, "held:held:holding:holds"),
    ("bring", 1, "brought:brought:bringing:brings"),
    ("happen", 1, "r"), ("write", 0, "wrote:written:writing:writes"),
    ("provide", 1, "r"), ("sit", 2, "sat:sat:sitting:sits"),
    ("stand", 1, "stood:stood:standing:stands"),
    ("lose", 1, "lost:lost:losing:loses"), ("pay", 1, "paid:paid:paying:pays"),
    ("meet", 1, "met:met:meeting:meets"), ("include", 1, "r"),
    ("continue", 1, "r"), ("learn", 1, "r"), ("change", 1, "r"),
    ("lead", 1, "led:led:leading:leads"), ("understand", 1, "understood:understood:understanding:understands"),
    ("watch", 1, "r"), ("follow", 1, "r"), ("stop", 1, "d"),
    ("create", 1, "r"), ("speak", 1, "spoke:spoken:speaking:speaks"),
    ("read", 1, "read:read:reading:reads"), ("allow", 1, "r"),
    ("add", 1, "r"), ("spend", 2, "spent:spent:spending:spends"),
    ("grow", 1, "grew:grown:growing:grows"), ("open", 1, "r"),
    ("walk", 1, "r"), ("win", 1, "won:won:winning:wins"),
    ("offer", 1, "r"), ("remember", 1, "r"), ("consider", 1, "r"),
    ("appear", 1, "r"), ("buy", 1, "bought:bought:buying:buys"),
    ("wait", 1, "r"), ("serve", 1, "r"), ("die", 1, "died:died:dying:dies"),
    ("send", 1, "sent:sent:sending:sends"), ("expect", 1, "r"),
    ("build", 1, "built:built:building:builds"), ("stay", 1, "r"),
    ("fall", 1, "fell:fallen:falling:falls"), ("cut", 2, "cut:cut:cutting:cuts"),
    ("reach", 1, "r"), ("kill", 2, "r"), ("remain", 1, "r"),
    ("suggest", 1, "r"), ("raise", 1, "r"), ("pass", 1, "r"),
    ("sell", 1, "sold:sold:selling:sells"), ("require", 1, "r"),
    ("report", 1, "r"), ("decide", 1, "r"), ("pull", 2, "r"),
    ("return", 1, "r"), ("explain", 1, "r"), ("hope", 1, "r"),
    ("develop", 1, "r"), ("carry", 1, "r"), ("break", 1, "broke:broken:breaking:breaks"),
    ("receive", 1, "r"), ("agree", 1, "r"), ("support", 1, "r"),
    ("hit", 2, "hit:hit:hitting:hits"), ("produce", 1, "r"),
    ("eat", 1, "ate:eaten:eating:eats"), ("cover", 1, "r"),
    ("catch", 2, "caught:caught:catching:catches"),
    ("draw", 2, "drew:drawn:drawing:draws"),
    ("choose", 1, "chose:chosen:choosing:chooses"),
    ("cause", 1, "r"), ("listen", 2, "r"), ("point", 2, "r"),
    ("wonder", 2, "r"), ("accept", 1, "r"), ("visit", 2, "r"),
    ("finish", 2, "r"), ("complete", 1, "r"), ("start", 1, "r"),
    ("perform", 2, "r"), ("describe", 1, "r"), ("study", 1, "r"),
    ("discuss", 2, "r"), ("improve", 1, "r"), ("increase", 1, "r"),
    ("reduce", 1, "r"), ("maintain", 2, "r"), ("establish", 2, "r"),
    ("achieve", 2, "r"), ("obtain", 2, "r"), ("manage", 2, "r"),
    ("organize", 2, "r"), ("prepare", 2, "r"), ("protect", 2, "r"),
    ("prevent", 2, "r"), ("avoid", 2, "r"), ("destroy", 2, "r"),
    ("replace", 2, "r"), ("remove", 1, "r"), ("repair", 2, "r"),
    ("restore", 2, "r"), ("rebuild", 3, "rebuilt:rebuilt:rebuilding:rebuilds"),
    ("design", 2, "r"), ("construct", 3, "r"), ("invent", 3, "r"),
    ("discover", 2, "r"), ("explore", 2, "r"), ("examine", 2, "r"),
    ("investigate", 2, "r"), ("observe", 2, "r"), ("measure", 2, "r"),
    ("calculate", 3, "r"), ("compare", 2, "r"), ("analyze", 2, "r"),
    ("estimate", 2, "r"), ("predict", 2, "r"), ("determine", 2, "r"),
    ("identify", 2, "r"), ("recognize", 2, "r"), ("confirm", 2, "r"),
    ("prove", 2, "r"), ("demonstrate", 2, "r"), ("reveal", 2, "r"),
    ("indicate", 2, "r"), ("represent", 2, "r"), ("reflect", 2, "r"),
    ("express", 2, "r"), ("mention", 2, "r"), ("announce", 2, "r"),
    ("declare", 2, "r"), ("claim", 2, "r"), ("argue", 2, "r"),
    ("deny", 3, "r"), ("admit", 2, "admitted:admitted:admitting:admits"),
    ("reply", 3, "r"), ("respond", 2, "r"), ("repeat", 2, "r"),
    ("translate", 3, "r"), ("publish", 2, "r"), ("print", 2, "r"),
    ("record", 2, "r"), ("collect", 2, "r"), ("gather", 2, "r"),
    ("select", 2, "r"), ("pick", 2, "r"), ("arrange", 2, "r"),
    ("sort", 3, "r"), ("divide", 2, "r"), ("separate", 2, "r"),
    ("combine", 2, "r"), ("join", 2, "r"), ("connect", 2, "r"),
    ("attach", 3, "r"), ("mix", 3, "r"), ("blend", 4, "r"),
    ("fill", 2, "r"), ("empty", 3, "r"), ("load", 2, "r"),
    ("pack", 3, "r"), ("wrap", 3, "d"), ("store", 2, "r"),
    ("deliver", 2, "r"), ("transport", 3, "r"), ("transfer", 3, "transferred:transferred:transferring:transfers"),
    ("carry", 1, "r"), ("lift", 2, "r"), ("drop", 2, "d"),
    ("throw", 2, "threw:thrown:throwing:throws"), ("push", 2, "r"),
    ("press", 2, "r"), ("touch", 2, "r"), ("shake", 3, "shook:shaken:shaking:shakes"),
    ("bend", 3, "bent:bent:bending:bends"), ("fold", 3, "r"),
    ("stretch", 3, "r"), ("tear", 3, "tore:torn:tearing:tears"),
    ("split", 3, "split:split:splitting:splits"),
    ("crush", 4, "r"), ("grind", 4, "ground:ground:grinding:grinds"),
    ("dig", 3, "dug:dug:digging:digs"), ("plant", 2, "r"),
    ("harvest", 3, "r"), ("feed", 2, "fed:fed:feeding:feeds"),
    ("cook", 2, "r"), ("bake", 3, "r"), ("boil", 3, "r"),
    ("fry", 4, "r"), ("roast", 4, "r"), ("freeze", 3, "froze:frozen:freezing:freezes"),
    ("melt", 3, "r"), ("burn", 2, "r"), ("heat", 2, "r"),
    ("cool", 2, "r"), ("dry", 3, "r"), ("wash", 2, "r"),
    ("clean", 2, "r"), ("polish", 4, "r"), ("sweep", 3, "swept:swept:sweeping:sweeps"),
    ("paint", 2, "r"), ("decorate", 3, "r"), ("sew", 4, "r"),
    ("knit", 4, "knitted:knitted:knitting:knits"), ("weave", 4, "wove:woven:weaving:weaves"),
    ("drive", 1, "drove:driven:driving:drives"),
    ("ride", 2, "rode:ridden:riding:rides"),
    ("fly", 2, "flew:flown:flying:flies"),
    ("sail", 3, "r"), ("swim", 3, "swam:swum:swimming:swims"),
    ("climb", 2, "r"), ("jump", 2, "r"), ("skip", 4, "d"),
    ("crawl", 4, "r"), ("slide", 3, "slid:slid:sliding:slides"),
    ("slip", 3, "d"), ("roll", 2, "r"), ("spin", 4, "spun:spun:spinning:spins"),
    ("turn", 1, "r"), ("twist", 3, "r"), ("rotate", 4, "r"),
    ("travel", 2, "r"), ("arrive", 1, "r"), ("depart", 3, "r"),
    ("enter", 1, "r"), ("escape", 2, "r"), ("flee", 4, "fled:fled:fleeing:flees"),
    ("chase", 3, "r"), ("hunt", 3, "r"), ("search", 2, "r"),
    ("seek", 2, "sought:sought:seeking:seeks"), ("hide", 2, "hid:hidden:hiding:hides"),
    ("cross", 2, "r"), ("wander", 4, "r"), ("approach", 2, "r"),
    ("retreat", 4, "r"), ("advance", 3, "r"), ("proceed", 3, "r"),
    ("settle", 2, "r"), ("occupy", 3, "r"), ("surround", 3, "r"),
    ("defend", 2, "r"), ("guard", 3, "r"), ("rescue", 3, "r"),
    ("save", 1, "r"), ("recover", 2, "r"), ("survive", 2, "r"),
    ("suffer", 2, "r"), ("hurt", 2, "hurt:hurt:hurting:hurts"),
    ("heal", 3, "r"), ("cure", 3, "r"), ("treat", 2, "r"),
    ("examine", 2, "r"), ("test", 2, "r"), ("operate", 2, "r"),
    ("breathe", 3, "r"), ("smell", 3, "r"), ("taste", 2, "r"),
    ("smile", 2, "r"), ("laugh", 2, "r"), ("cry", 2, "r"),
    ("shout", 2, "r"), ("whisper", 3, "r"), ("sing", 2, "sang:sung:singing:sings"),
    ("dance", 2, "r"), ("celebrate", 3, "r"), ("greet", 3, "r"),
    ("welcome", 2, "r"), ("invite", 2, "r"), ("thank", 2, "r"),
    ("apologize", 4, "r"), ("forgive", 3, "forgave:forgiven:forgiving:forgives"),
    ("blame", 3, "r"), ("accuse", 3, "r"), ("warn", 2, "r"),
    ("threaten", 3, "r"), ("promise", 2, "r"), ("swear", 4, "swore:sworn:swearing:swears"),
    ("insist", 3, "r"), ("persuade", 3, "r"), ("convince", 2, "r"),
    ("encourage", 2, "r"), ("inspire", 3, "r"), ("motivate", 4, "r"),
    ("teach", 1, "taught:taught:teaching:teaches"),
    ("train", 2, "r"), ("instruct", 4, "r"), ("advise", 3, "r"),
    ("recommend", 2, "r"), ("remind", 2, "r"), ("inform", 2, "r"),
    ("notify", 4, "r"), ("introduce", 2, "r"), ("present", 2, "r"),
    ("demonstrate", 2, "r"), ("illustrate", 3, "r"), ("attend", 2, "r"),
    ("participate", 3, "r"), ("contribute", 2, "r"), ("cooperate", 4, "r"),
    ("compete", 3, "r"), ("challenge", 2, "r"), ("defeat", 3, "r"),
    ("beat", 2, "beat:beaten:beating:beats"), ("conquer", 4, "r"),
    ("surrender", 4, "r"), ("negotiate", 3, "r"), ("trade", 2, "r"),
    ("exchange", 3, "r"), ("borrow", 3, "r"), ("lend", 3, "lent:lent:lending:lends"),
    ("owe", 3, "r"), ("earn", 2, "r"), ("spend", 2, "spent:spent:spending:spends"),
    ("waste", 3, "r"), ("invest", 3, "r"), ("donate", 4, "r"),
    ("contribute", 2, "r"), ("charge", 2, "r"), ("afford", 3, "r"),
    ("hire", 2, "r"), ("employ", 3, "r"), ("retire", 3, "r"),
    ("resign", 4, "r"), ("dismiss", 3, "r"), ("promote", 3, "r"),
    ("appoint", 3, "r"), ("elect", 2, "r"), ("govern", 3, "r"),
    ("command", 3, "r"), ("direct", 2, "r"), ("guide", 2, "r"),
    ("supervise", 4, "r"), ("inspect", 4, "r"), ("monitor", 3, "r"),
    ("regulate", 3, "r"), ("enforce", 3, "r"), ("forbid", 4, "forbade:forbidden:forbidding:forbids"),
    ("permit", 3, "permitted:permitted:permitting:permits"),
    ("approve", 2, "r"), ("reject", 2, "r"), ("refuse", 2, "r"),
    ("cancel", 3, "r"), ("delay", 3, "r"), ("postpone", 4, "r"),
    ("schedule", 3, "r"), ("plan", 1, "planned:planned:planning:plans"),
    ("intend", 2, "r"), ("propose", 2, "r"), ("assume", 2, "r"),
    ("suppose", 2, "r"), ("imagine", 2, "r"), ("guess", 2, "r"),
    ("doubt", 3, "r"), ("trust", 2, "r"), ("rely", 3, "r"),
    ("depend", 2, "r"), ("belong", 2, "r"), ("possess", 3, "r"),
    ("contain", 2, "r"), ("consist", 3, "r"), ("comprise", 4, "r"),
    ("involve", 2, "r"), ("concern", 2, "r"), ("relate", 2, "r"),
    ("refer", 2, "referred:referred:referring:refers"),
    ("apply", 2, "r"), ("adopt", 3, "r"), ("adapt", 3, "r"),
    ("adjust", 3, "r"), ("modify", 3, "r"), ("convert", 3, "r"),
    ("transform", 3, "r"), ("shift", 3, "r"), ("vary", 3, "r"),
    ("differ", 3, "r"), ("resemble", 4, "r"), ("match", 2, "r"),
    ("fit", 2, "fitted:fitted:fitting:fits"), ("suit", 3, "r"),
    ("succeed", 2, "r"), ("fail", 2, "r"), ("attempt", 2, "r"),
    ("strive", 4, "strove:striven:striving:strives"),
    ("struggle", 2, "r"), ("overcome", 3, "overcame:overcome:overcoming:overcomes"),
    ("solve", 2, "r"), ("resolve", 3, "r"), ("handle", 2, "r"),
    ("address", 2, "r"), ("tackle", 4, "r"), ("cope", 3, "r"),
    ("ignore", 2, "r"), ("neglect", 4, "r"), ("notice", 2, "r"),
    ("realize", 2, "r"), ("appreciate", 3, "r"), ("value", 2, "r"),
    ("admire", 3, "r"), ("praise", 3, "r"), ("criticize", 3, "r"),
    ("complain", 2, "r"), ("protest", 3, "r"), ("oppose", 2, "r"),
    ("resist", 3, "r"), ("object", 3, "r"), ("interrupt", 3, "r"),
    ("disturb", 3, "r"), ("bother", 3, "r"), ("annoy", 4, "r"),
    ("frighten", 3, "r"), ("scare", 3, "r"), ("shock", 3, "r"),
    ("amaze", 3, "r"), ("astonish", 4, "r"), ("impress", 3, "r"),
    ("satisfy", 3, "r"), ("please", 2, "r"), ("delight", 4, "r"),
    ("entertain", 3, "r"), ("amuse", 4, "r"), ("bore", 4, "r"),
    ("tire", 4, "r"), ("rest", 2, "r"), ("relax", 3, "r"),
    ("wake", 2, "woke:woken:waking:wakes"), ("sleep", 2, "slept:slept:sleeping:sleeps"),
    ("dress", 3, "r"), ("wear", 1, "wore:worn:wearing:wears"),
    ("shine", 3, "shone:shone:shining:shines"), ("glow", 4, "r"),
    ("flash", 3, "r"), ("fade", 3, "r"), ("disappear", 2, "r"),
    ("vanish", 4, "r"), ("emerge", 3, "r"), ("appear", 1, "r"),
    ("exist", 2, "r"), ("occur", 2, "occurred:occurred:occurring:occurs"),
    ("remain", 1, "r"), ("last", 2, "r"), ("endure", 4, "r"),
    ("persist", 4, "r"), ("cease", 4, "r"), ("end", 1, "r"),
    ("conclude", 3, "r"), ("summarize", 4, "r"), ("state", 1, "r"),
    ("note", 2, "r"), ("add", 1, "r"), ("count", 2, "r"),
    ("number", 2, "r"), ("rank", 3, "r"), ("rate", 2, "r"),
    ("weigh", 3, "r"), ("balance", 3, "r"), ("equal", 3, "r"),
    ("exceed", 3, "r"), ("surpass", 4, "r"), ("double", 3, "r"),
    ("triple", 4, "r"), ("expand", 2, "r"), ("extend", 2, "r"),
    ("enlarge", 4, "r"), ("shrink", 4, "shrank:shrunk:shrinking:shrinks"),
    ("decrease", 3, "r"), ("diminish", 4, "r"), ("limit", 2, "r"),
    ("restrict", 3, "r"), ("confine", 4, "r"), ("release", 2, "r"),
    ("free", 2, "r"), ("liberate", 4, "r"), ("capture", 3, "r"),
    ("seize", 3, "r"), ("grab", 3, "grabbed:grabbed:grabbing:grabs"),
    ("grasp", 4, "r"), ("grip", 4, "gripped:gripped:gripping:grips"),
    ("hang", 3, "hung:hung:hanging:hangs"), ("suspend", 4, "r"),
    ("float", 3, "r"), ("sink", 3, "sank:sunk:sinking:sinks"),
    ("drown", 4, "r"), ("dive", 4, "r"), ("pour", 3, "r"),
    ("spill", 4, "r"), ("leak", 4, "r"), ("flow", 2, "r"),
    ("drip", 4, "dripped:dripped:dripping:drips"), ("splash", 4, "r"),
    ("soak", 4, "r"), ("absorb", 3, "r"), ("sum", 4, "summed:summed:summing:sums"),
    ("drain", 4, "r"), ("evaporate", 4, "r"), ("dissolve", 4, "r"),
]

# --- adjectives -----------------------------------------------------------

ADJS = [
    ("new", 0, "l"), ("old", 0, "-"), ("good", 0, "-"), ("great", 0, "l"),
    ("high", 0, "l"), ("low", 1, "-"), ("small", 0, "-"), ("large", 0, "l"),
    ("big", 1, "-"), ("long", 0, "-"), ("short", 1, "l"), ("little", 0, "-"),
    ("own", 1, "-"), ("right", 0, "l"), ("wrong", 1, "l"), ("different", 0, "l"),
    ("same", 1, "-"), ("important", 0, "l"), ("public", 1, "l"),
    ("private", 1, "l"), ("early", 1, "-"), ("late", 1, "l"), ("young", 1, "-"),
    ("national", 1, "l"), ("international", 2, "l"), ("local", 1, "l"),
    ("central", 2, "l"), ("northern", 2, "-"), ("southern", 2, "-"),
    ("eastern", 2, "-"), ("western", 2, "-"), ("foreign", 2, "-"),
    ("political", 1, "l"), ("social", 1, "l"), ("economic", 2, "-"),
    ("economical", 4, "l"), ("financial", 2, "l"), ("commercial", 3, "l"),
    ("industrial", 2, "l"), ("agricultural", 3, "l"), ("military", 2, "-"),
    ("legal", 2, "l"), ("medical", 2, "l"), ("scientific", 2, "l"),
    ("technical", 2, "l"), ("historical", 2, "l"), ("ancient", 2, "l"),
    ("modern", 1, "l"), ("traditional", 2, "l"), ("classical", 3, "l"),
    ("contemporary", 3, "-"), ("original", 2, "l"), ("final", 1, "l"),
    ("initial", 2, "l"), ("previous", 2, "l"), ("current", 1, "l"),
    ("recent", 1, "l"), ("former", 2, "l"), ("future", 2, "-"),
    ("permanent", 3, "l"), ("temporary", 3, "l"), ("constant", 3, "l"),
    ("frequent", 3, "l"), ("regular", 2, "l"), ("occasional", 3, "l"),
    ("rapid", 3, "l"), ("quick", 2, "l"), ("fast", 2, "-"), ("slow", 2, "l"),
    ("sudden", 2, "l"), ("gradual", 3, "l"), ("immediate", 2, "l"),
    ("instant", 3, "l"), ("brief", 3, "l"), ("whole", 1, "-"),
    ("entire", 2, "l"), ("complete", 1, "l"), ("total", 2, "l"),
    ("full", 1, "l"), ("partial", 3, "l"), ("single", 1, "-"),
    ("double", 3, "-"), ("multiple", 2, "-"), ("common", 1, "l"),
    ("rare", 2, "l"), ("unique", 2, "l"), ("special", 1, "l"),
    ("particular", 2, "l"), ("general", 1, "l"), ("specific", 2, "l"),
    ("typical", 2, "l"), ("normal", 2, "l"), ("usual", 2, "l"),
    ("strange", 2, "l"), ("unusual", 2, "l"), ("odd", 3, "l"),
    ("curious", 3, "l"), ("familiar", 2, "l"), ("similar", 1, "l"),
    ("equal", 2, "l"), ("equivalent", 3, "l"), ("opposite", 3, "-"),
    ("separate", 2, "l"), ("distinct", 3, "l"), ("various", 1, "l"),
    ("diverse", 3, "l"), ("main", 1, "l"), ("major", 1, "-"),
    ("minor", 2, "-"), ("primary", 2, "primarily"), ("secondary", 3, "-"),
    ("principal", 3, "l"), ("chief", 2, "l"), ("leading", 2, "-"),
    ("key", 2, "-"), ("essential", 2, "l"), ("necessary", 1, "necessarily"),
    ("vital", 3, "l"), ("crucial", 2, "l"), ("critical", 2, "l"),
    ("significant", 1, "l"), ("considerable", 3, "considerably"),
    ("substantial", 3, "l"), ("extensive", 3, "l"), ("enormous", 2, "l"),
    ("huge", 2, "l"), ("vast", 3, "l"), ("immense", 4, "l"),
    ("giant", 3, "-"), ("massive", 3, "l"), ("tiny", 3, "-"),
    ("narrow", 2, "l"), ("wide", 1, "l"), ("broad", 2, "l"),
    ("deep", 2, "l"), ("shallow", 4, "-"), ("thick", 3, "l"),
    ("thin", 3, "l"), ("heavy", 2, "heavily"), ("light", 1, "l"),
    ("strong", 1, "l"), ("weak", 2, "l"), ("powerful", 2, "l"),
    ("gentle", 3, "l"), ("soft", 2, "l"), ("hard", 1, "-"),
    ("firm", 3, "l"), ("solid", 3, "l"), ("smooth", 3, "l"),
    ("rough", 3, "l"), ("sharp", 2, "l"), ("flat", 3, "-"),
    ("steep", 4, "l"), ("straight", 2, "-"), ("round", 2, "l"),
    ("square", 3, "l"), ("hollow", 4, "-"), ("hot", 2, "l"),
    ("cold", 1, "l"), ("warm", 2, "l"), ("cool", 2, "l"),
    ("frozen", 3, "-"), ("mild", 3, "l"), ("dry", 2, "l"),
    ("wet", 3, "-"), ("damp", 4, "-"), ("humid", 4, "-"),
    ("bright", 2, "l"), ("dark", 1, "l"), ("dim", 4, "l"),
    ("pale", 3, "l"), ("clear", 1, "l"), ("cloudy", 4, "-"),
    ("sunny", 3, "-"), ("rainy", 4, "-"), ("windy", 4, "-"),
    ("stormy", 4, "-"), ("foggy", 4, "-"), ("snowy", 4, "-"),
    ("red", 1, "-"), ("blue", 1, "-"), ("green", 1, "-"),
    ("yellow", 2, "-"), ("orange", 2, "-"), ("purple", 3, "-"),
    ("pink", 3, "-"), ("brown", 2, "-"), ("black", 1, "-"),
    ("white", 1, "-"), ("gray", 2, "-"), ("golden", 2, "-"),
    ("beautiful", 1, "l"), ("pretty", 2, "-"), ("handsome", 3, "l"),
    ("attractive", 3, "l"), ("elegant", 3, "l"), ("lovely", 3, "-"),
    ("ugly", 3, "-"), ("plain", 3, "l"), ("happy", 1, "happily"),
    ("glad", 3, "l"), ("cheerful", 4, "l"), ("joyful", 4, "l"),
    ("sad", 2, "l"), ("unhappy", 3, "unhappily"), ("miserable", 4, "miserably"),
    ("angry", 2, "angrily"), ("furious", 4, "l"), ("calm", 2, "l"),
    ("quiet", 2, "l"), ("silent", 2, "l"), ("loud", 2, "l"),
    ("noisy", 4, "noisily"), ("peaceful", 3, "l"), ("violent", 2, "l"),
    ("dangerous", 2, "l"), ("safe", 1, "l"), ("secure", 3, "l"),
    ("risky", 4, "-"), ("careful", 2, "l"), ("careless", 4, "l"),
    ("cautious", 4, "l"), ("brave", 3, "l"), ("bold", 3, "l"),
    ("timid", 4, "l"), ("shy", 4, "-"), ("proud", 2, "l"),
    ("humble", 4, "humbly"), ("modest", 4, "l"), ("honest", 2, "l"),
    ("fair", 2, "l"), ("just", 2, "-"), ("loyal", 3, "l"),
    ("faithful", 4, "l"), ("generous", 3, "l"), ("kind", 2, "l"),
    ("friendly", 2, "-"), ("polite", 3, "l"), ("rude", 4, "l"),
    ("cruel", 3, "l"), ("selfish", 4, "l"), ("greedy", 4, "-"),
    ("jealous", 4, "l"), ("wise", 2, "l"), ("clever", 3, "l"),
    ("smart", 3, "l"), ("intelligent", 2, "l"), ("brilliant", 3, "l"),
    ("talented", 3, "-"), ("skilled", 3, "-"), ("experienced", 2, "-"),
    ("professional", 2, "l"), ("expert", 3, "l"), ("capable", 3, "capably"),
    ("competent", 4, "l"), ("efficient", 2, "l"), ("effective", 2, "l"),
    ("productive", 3, "l"), ("successful", 1, "l"), ("famous", 2, "l"),
    ("popular", 1, "l"), ("favorite", 2, "-"), ("excellent", 2, "l"),
    ("outstanding", 3, "l"), ("remarkable", 3, "remarkably"),
    ("impressive", 3, "l"), ("wonderful", 2, "l"), ("marvelous", 4, "l"),
    ("splendid", 4, "l"), ("superb", 4, "l"), ("perfect", 1, "l"),
    ("ideal", 3, "l"), ("suitable", 3, "suitably"), ("appropriate", 2, "l"),
    ("proper", 2, "l"), ("correct", 2, "l"), ("accurate", 2, "l"),
    ("precise", 3, "l"), ("exact", 2, "l"), ("true", 1, "-"),
    ("false", 2, "l"), ("real", 1, "-"), ("actual", 2, "l"),
    ("genuine", 3, "l"), ("authentic", 4, "l"), ("artificial", 3, "l"),
    ("fake", 4, "-"), ("obvious", 2, "l"), ("evident", 3, "l"),
    ("apparent", 2, "l"), ("visible", 3, "visibly"), ("invisible", 4, "invisibly"),
    ("hidden", 3, "-"), ("mysterious", 3, "l"), ("unknown", 2, "-"),
    ("certain", 1, "l"), ("sure", 1, "l"), ("definite", 3, "l"),
    ("possible", 1, "possibly"), ("impossible", 2, "impossibly"),
    ("likely", 1, "-"), ("unlikely", 3, "-"), ("probable", 3, "probably"),
    ("available", 1, "-"), ("accessible", 4, "-"), ("convenient", 3, "l"),
    ("comfortable", 2, "comfortably"), ("pleasant", 3, "l"),
    ("enjoyable", 4, "-"), ("interesting", 1, "l"), ("exciting", 2, "l"),
    ("thrilling", 4, "l"), ("boring", 3, "l"), ("dull", 4, "-"),
    ("tedious", 4, "l"), ("difficult", 1, "-"), ("tough", 3, "l"),
    ("complex", 2, "-"), ("complicated", 3, "-"), ("simple", 1, "simply"),
    ("easy", 1, "easily"), ("basic", 2, "basically"), ("fundamental", 3, "l"),
    ("advanced", 2, "-"), ("sophisticated", 3, "-"), ("elaborate", 4, "l"),
    ("detailed", 3, "-"), ("thorough", 3, "l"), ("comprehensive", 3, "l"),
    ("absolute", 2, "l"), ("relative", 3, "l"), ("pure", 3, "l"),
    ("mere", 3, "l"), ("sheer", 4, "l"), ("extreme", 2, "l"),
    ("intense", 3, "l"), ("severe", 2, "l"), ("serious", 1, "l"),
    ("grave", 4, "l"), ("urgent", 3, "l"), ("desperate", 3, "l"),
    ("eager", 3, "l"), ("keen", 4, "l"), ("anxious", 3, "l"),
    ("nervous", 3, "l"), ("worried", 3, "-"), ("afraid", 2, "-"),
    ("frightened", 4, "-"), ("terrible", 2, "terribly"),
    ("horrible", 3, "horribly"), ("awful", 3, "l"), ("dreadful", 4, "l"),
    ("bad", 1, "badly"), ("poor", 1, "l"), ("rich", 1, "l"),
    ("wealthy", 3, "-"), ("prosperous", 4, "l"), ("fortunate", 3, "l"),
    ("lucky", 3, "luckily"), ("unfortunate", 3, "l"), ("healthy", 2, "-"),
    ("sick", 2, "-"), ("ill", 2, "-"), ("tired", 2, "-"),
    ("weary", 4, "wearily"), ("hungry", 3, "-"), ("thirsty", 4, "-"),
    ("alive", 2, "-"), ("dead", 1, "-"), ("living", 2, "-"),
    ("active", 2, "l"), ("passive", 4, "l"), ("busy", 2, "busily"),
    ("idle", 4, "-"), ("lazy", 4, "lazily"), ("ready", 1, "readily"),
    ("willing", 2, "l"), ("reluctant", 4, "l"), ("independent", 2, "l"),
    ("dependent", 3, "-"), ("free", 1, "l"), ("open", 1, "l"),
    ("closed", 2, "-"), ("empty", 2, "-"), ("vacant", 4, "-"),
    ("crowded", 3, "-"), ("dense", 4, "l"), ("sparse", 4, "l"),
    ("abundant", 4, "l"), ("scarce", 4, "l"), ("sufficient", 3, "l"),
    ("adequate", 3, "l"), ("extra", 2, "-"), ("additional", 2, "l"),
    ("spare", 4, "-"), ("useful", 1, "l"), ("useless", 3, "l"),
    ("valuable", 2, "-"), ("precious", 3, "l"), ("worthless", 4, "l"),
    ("expensive", 2, "l"), ("cheap", 3, "l"), ("reasonable", 3, "reasonably"),
    ("moderate", 3, "l"), ("average", 2, "-"), ("standard", 2, "-"),
    ("superior", 3, "-"), ("inferior", 4, "-"), ("supreme", 3, "l"),
    ("maximum", 3, "-"), ("minimum", 3, "-"), ("optimal", 4, "l"),
    ("stable", 3, "stably"), ("steady", 3, "steadily"),
    ("reliable", 3, "reliably"), ("consistent", 3, "l"),
    ("flexible", 3, "flexibly"), ("rigid", 4, "l"), ("strict", 3, "l"),
    ("loose", 3, "l"), ("tight", 3, "l"), ("tense", 4, "l"),
    ("fresh", 2, "l"), ("stale", 4, "-"), ("ripe", 4, "-"),
    ("raw", 3, "-"), ("rotten", 4, "-"), ("sweet", 2, "l"),
    ("sour", 4, "-"), ("bitter", 3, "l"), ("salty", 4, "-"),
    ("spicy", 4, "-"), ("delicious", 3, "l"), ("tasty", 4, "-"),
    ("clean", 2, "l"), ("dirty", 3, "-"), ("filthy", 4, "-"),
    ("neat", 4, "l"), ("tidy", 4, "-"), ("messy", 4, "-"),
    ("organized", 3, "-"), ("orderly", 4, "-"), ("chaotic", 4, "-"),
    ("wild", 2, "l"), ("tame", 4, "l"), ("domestic", 3, "l"),
    ("native", 3, "-"), ("natural", 1, "l"), ("organic", 4, "l"),
    ("rural", 3, "-"), ("urban", 2, "-"), ("coastal", 4, "-"),
    ("tropical", 3, "l"), ("polar", 4, "-"), ("arctic", 4, "-"),
    ("global", 2, "l"), ("universal", 3, "l"), ("regional", 3, "l"),
    ("royal", 2, "l"), ("noble", 3, "nobly"), ("sacred", 3, "l"),
    ("holy", 3, "-"), ("religious", 2, "l"), ("spiritual", 3, "l"),
    ("moral", 3, "l"), ("ethical", 3, "l"), ("legal", 2, "l"),
    ("illegal", 3, "l"), ("criminal", 3, "l"), ("innocent", 3, "l"),
    ("guilty", 3, "l"), ("responsible", 2, "responsibly"),
    ("accountable", 4, "-"), ("official", 1, "l"), ("formal", 2, "l"),
    ("informal", 4, "l"), ("casual", 3, "l"), ("ordinary", 2, "ordinarily"),
    ("extraordinary", 3, "extraordinarily"), ("everyday", 3, "-"),
    ("daily", 2, "-"), ("weekly", 3, "-"), ("monthly", 3, "-"),
    ("annual", 2, "l"), ("seasonal", 4, "l"), ("temporal", 4, "l"),
    ("spatial", 4, "l"), ("physical", 2, "l"), ("mental", 2, "l"),
    ("emotional", 2, "l"), ("psychological", 3, "l"), ("verbal", 4, "l"),
    ("visual", 3, "l"), ("audible", 4, "audibly"), ("manual", 4, "l"),
    ("automatic", 3, "automatically"), ("mechanical", 3, "l"),
    ("electrical", 3, "l"), ("electronic", 3, "l"), ("digital", 2, "l"),
    ("virtual", 3, "l"), ("nuclear", 3, "-"), ("solar", 3, "-"),
    ("lunar", 4, "-"), ("chemical", 2, "l"), ("biological", 3, "l"),
    ("genetic", 3, "l"), ("environmental", 2, "l"), ("ecological", 4, "l"),
]

# --- additional standalone words (golden-case neighborhood included) ------

EXTRA_WORDS = [
    # near neighbors used by the character-scoring demo and tests
    ("simmer", 6), ("bummer", 6), ("hummer", 6), ("mummer", 8), ("sumer", 8),
    ("summit", 5), ("summon", 6), ("summary", 4), ("hammer", 4), ("hamper", 6),
    ("camper", 6), ("damper", 7), ("bumper", 6), ("jumper", 6), ("lumber", 5),
    ("number", 1), ("slumber", 7), ("thumper", 8), ("dimmer", 7), ("glimmer", 6),
    ("shimmer", 6), ("skimmer", 8), ("swimmer", 5), ("trimmer", 7),
    ("drummer", 6), ("plumber", 5), ("rummage", 8), ("immense", 4),
    # months and days
    ("january", 3), ("february", 3), ("march", 3), ("april", 3), ("june", 3),
    ("july", 3), ("august", 3), ("september", 3), ("october", 3),
    ("november", 3), ("december", 3), ("monday", 3), ("tuesday", 3),
    ("wednesday", 3), ("thursday", 3), ("friday", 3), ("saturday", 3),
    ("sunday", 3),
    # common words not covered above
    ("yes", 1), ("ok", 3), ("hello", 3), ("goodbye", 4), ("please", 2),
    ("thanks", 2), ("sorry", 2), ("welcome", 2), ("maybe", 2), ("really", 1),
    ("actually", 1), ("certainly", 2), ("definitely", 2), ("apparently", 3),
    ("obviously", 2), ("clearly", 2), ("exactly", 2), ("nearly", 2),
    ("approximately", 3), ("roughly", 3), ("barely", 3), ("hardly", 2),
    ("merely", 3), ("simply", 1), ("truly", 2), ("fully", 2), ("highly", 2),
    ("deeply", 3), ("widely", 2), ("largely", 2), ("mostly", 2),
    ("mainly", 2), ("partly", 3), ("entirely", 2), ("completely", 2),
    ("totally", 2), ("absolutely", 2), ("extremely", 2), ("fairly", 2),
    ("slightly", 2), ("relatively", 2), ("increasingly", 3), ("especially", 1),
    ("particularly", 2), ("specifically", 2), ("generally", 2),
    ("typically", 2), ("normally", 2), ("currently", 2), ("recently", 1),
    ("previously", 2), ("originally", 2), ("initially", 2), ("immediately", 2),
    ("suddenly", 2), ("quickly", 2), ("slowly", 2), ("gradually", 3),
    ("carefully", 2), ("properly", 3), ("directly", 2), ("together", 1),
    ("apart", 3), ("forward", 2), ("backward", 3), ("upward", 4),
    ("downward", 4), ("inside", 2), ("outside", 1), ("nearby", 3),
    ("abroad", 3), ("overseas", 4), ("ahead", 2), ("aside", 3),
    ("meanwhile", 3), ("afterwards", 3), ("beforehand", 4), ("already", 1),
    ("soon", 1), ("later", 1), ("earlier", 2), ("today", 1), ("tomorrow", 2),
    ("yesterday", 2), ("tonight", 3), ("ago", 1), ("else", 2),
    ("everyday", 3), ("overall", 2), ("altogether", 3), ("overnight", 4),
    ("anymore", 3), ("forever", 3), ("seldom", 4), ("thereby", 4),
    ("whereby", 4), ("wherein", 4), ("therein", 4), ("alike", 4),
    ("alone", 2), ("alongside", 4), ("amongst", 4), ("beneath", 3),
    ("beside", 3), ("inward", 4), ("outward", 4), ("further", 2),
    ("farther", 4), ("elsewhere", 3), ("abroad", 3), ("indoors", 4),
    ("outdoors", 4), ("uphill", 4), ("downhill", 4), ("upstairs", 4),
    ("downstairs", 4), ("halfway", 4), ("sideways", 4), ("anew", 4),
    # short function words missed above
    ("am", 1), ("up", 0), ("down", 0), ("out", 0), ("off", 1), ("oh", 2),
    ("well", 1), ("far", 1), ("away", 1), ("back", 1), ("being", 1),
    ("having", 1), ("doing", 1), ("saying", 2), ("got", 1), ("gone", 1),
    # nationalities and languages
    ("american", 1), ("british", 2), ("english", 1), ("french", 1),
    ("german", 2), ("spanish", 2), ("italian", 2), ("dutch", 3),
    ("russian", 2), ("chinese", 2), ("japanese", 2), ("korean", 3),
    ("indian", 2), ("african", 2), ("european", 1), ("asian", 3),
    ("mexican", 3), ("canadian", 3), ("australian", 3), ("brazilian", 4),
    ("egyptian", 3), ("greek", 2), ("roman", 2), ("turkish", 3),
    ("persian", 4), ("arabic", 3), ("hebrew", 4), ("latin", 3),
    ("irish", 3), ("scottish", 3), ("welsh", 4), ("polish", 3),
    ("swedish", 4), ("norwegian", 4), ("danish", 4), ("finnish", 4),
    ("austrian", 4), ("swiss", 3), ("belgian", 4), ("portuguese", 4),
    ("hungarian", 4), ("czech", 4), ("romanian", 4), ("ukrainian", 4),
    ("vietnamese", 4), ("thai", 4), ("indonesian", 4), ("argentine", 4),
    ("chilean", 4), ("colombian", 4), ("cuban", 4), ("israeli", 4),
    ("iranian", 4), ("pakistani", 4), ("nigerian", 4), ("kenyan", 4),
    ("ethiopian", 4), ("moroccan", 4), ("viking", 4), ("aztec", 4),
    # derived and abstract nouns
    ("information", 0), ("administration", 2), ("application", 2),
    ("operation", 1), ("construction", 2), ("introduction", 2),
    ("foundation", 2), ("situation", 1), ("condition", 1),
    ("contribution", 3), ("distribution", 2), ("attribution", 4),
    ("institution", 2), ("substitution", 4), ("resolution", 3),
    ("imagination", 3), ("destination", 3), ("examination", 4),
    ("determination", 3), ("expectation", 3), ("explanation", 3),
    ("exploration", 3), ("expression", 2), ("extension", 3),
    ("reduction", 3), ("reaction", 2), ("creation", 2), ("relation", 2),
    ("migration", 3), ("navigation", 4), ("inflation", 3),
    ("isolation", 3), ("location", 2), ("donation", 4), ("rotation", 4),
    ("variation", 3), ("vibration", 4), ("education", 1),
    ("dedication", 4), ("indication", 3), ("publication", 3),
    ("qualification", 4), ("identification", 3), ("notification", 4),
    ("modification", 4), ("verification", 4), ("classification", 4),
    ("specification", 4), ("certification", 4), ("justification", 4),
    ("calculation", 3), ("circulation", 3), ("regulation", 3),
    ("simulation", 4), ("translation", 3), ("installation", 3),
    ("cancellation", 4), ("consultation", 4), ("transportation", 3),
    ("representation", 3), ("presentation", 2), ("preservation", 4),
    ("conservation", 3), ("observation", 2), ("reservation", 3),
    ("conversation", 2), ("cooperation", 3), ("corporation", 3),
    ("celebration", 3), ("concentration", 3), ("consideration", 3),
    ("registration", 3), ("demonstration", 3), ("generation", 2),
    ("separation", 3), ("preparation", 3), ("declaration", 3),
    ("restoration", 4), ("integration", 3), ("organization", 2),
    ("civilization", 3), ("authorization", 4), ("globalization", 4),
    ("recognition", 2), ("definition", 2), ("composition", 3),
    ("opposition", 2), ("proposition", 4), ("disposition", 4),
    ("acquisition", 3), ("competition", 2), ("repetition", 4),
    ("tradition", 2), ("edition", 3), ("addition", 1), ("audition", 4),
    ("ambition", 3), ("nutrition", 4), ("ignition", 4),
    ("description", 2), ("prescription", 4), ("subscription", 4),
    ("inscription", 4), ("perception", 3), ("reception", 3),
    ("exception", 2), ("conception", 4), ("adoption", 3),
    ("assumption", 3), ("consumption", 3), ("corruption", 3),
    ("interruption", 4), ("eruption", 4), ("option", 2),
    ("injection", 4), ("connection", 2), ("collection", 2),
    ("correction", 3), ("direction", 2), ("inspection", 4),
    ("protection", 2), ("projection", 4), ("rejection", 4),
    ("selection", 2), ("section", 1), ("election", 2),
    ("reflection", 3), ("infection", 3), ("affection", 4),
    ("attention", 1), ("intention", 2), ("invention", 3),
    ("prevention", 3), ("convention", 3), ("intervention", 3),
    ("mention", 3), ("dimension", 3), ("suspension", 4),
    ("comprehension", 4), ("apprehension", 4), ("pension", 4),
    ("mission", 2), ("admission", 3), ("commission", 3),
    ("permission", 3), ("submission", 4), ("transmission", 3),
    ("emission", 4), ("omission", 4), ("session", 2),
    ("possession", 3), ("profession", 3), ("confession", 4),
    ("depression", 3), ("impression", 3), ("compression", 4),
    ("discussion", 2), ("percussion", 4), ("succession", 4),
    ("agreement", 2), ("argument", 2), ("arrangement", 3),
    ("assessment", 3), ("assignment", 3), ("attachment", 4),
    ("commitment", 3), ("department", 1), ("employment", 2),
    ("encouragement", 4), ("engagement", 3), ("enjoyment", 4),
    ("entertainment", 3), ("environment", 1), ("equipment", 2),
    ("establishment", 3), ("excitement", 3), ("experiment", 2),
    ("instrument", 2), ("investment", 2), ("judgment", 3),
    ("measurement", 3), ("movement", 2), ("payment", 2),
    ("placement", 4), ("punishment", 3), ("replacement", 3),
    ("requirement", 2), ("retirement", 3), ("settlement", 3),
    ("shipment", 4), ("statement", 1), ("treatment", 2),
    ("adjustment", 3), ("amusement", 4), ("announcement", 3),
    ("apartment", 2), ("appointment", 3), ("amazement", 4),
    ("management", 2), ("parliament", 2), ("tournament", 3),
    ("monument", 3), ("document", 2), ("moment", 1), ("element", 2),
    ("cement", 4), ("fragment", 4), ("segment", 3), ("comment", 2),
    ("darkness", 3), ("weakness", 3), ("awareness", 3),
    ("happiness", 3), ("sadness", 4), ("kindness", 3),
    ("business", 0), ("illness", 3), ("fitness", 3),
    ("witness", 2), ("madness", 4), ("sickness", 4),
    ("thickness", 4), ("loneliness", 4), ("willingness", 4),
    ("consciousness", 3), ("effectiveness", 4), ("forgiveness", 4),
    ("ability", 1), ("possibility", 2), ("probability", 3),
    ("responsibility", 2), ("stability", 3), ("flexibility", 4),
    ("visibility", 4), ("availability", 3), ("capability", 3),
    ("reliability", 4), ("activity", 1), ("creativity", 3),
    ("productivity", 3), ("electricity", 3), ("capacity", 2),
    ("opportunity", 2), ("community", 1), ("security", 2),
    ("majority", 2), ("minority", 3), ("priority", 2),
    ("authority", 2), ("university", 1), ("diversity", 3),
    ("identity", 2), ("quantity", 2), ("quality", 1),
    ("reality", 2), ("personality", 3), ("nationality", 4),
    ("humanity", 3), ("validity", 4), ("rarity", 4),
    ("clarity", 4), ("charity", 3), ("maturity", 4),
    ("curiosity", 4), ("generosity", 4), ("publicity", 4),
    ("simplicity", 4), ("complexity", 3), ("gravity", 3),
    ("velocity", 4), ("dignity", 4), ("unity", 3),
    ("utility", 3), ("facility", 2), ("mobility", 4),
    ("necessity", 3), ("intensity", 3), ("integrity", 3),
    ("prosperity", 4), ("popularity", 3), ("similarity", 3),
    ("citizenship", 4), ("championship", 3), ("leadership", 3),
    ("membership", 3), ("ownership", 3), ("partnership", 3),
    ("relationship", 2), ("scholarship", 4), ("friendship", 3),
    ("hardship", 4), ("worship", 3), ("township", 4),
    ("craftsmanship", 4), ("internship", 4), ("sponsorship", 4),
    ("difference", 1), ("conference", 2), ("reference", 2),
    ("preference", 3), ("interference", 4), ("confidence", 2),
    ("residence", 3), ("evidence", 1), ("influence", 2),
    ("audience", 2), ("experience", 1), ("existence", 2),
    ("presence", 2), ("absence", 2), ("essence", 3),
    ("sentence", 2), ("silence", 3), ("violence", 2),
    ("patience", 3), ("science", 1), ("conscience", 4),
    ("distance", 2), ("instance", 2), ("substance", 3),
    ("assistance", 3), ("resistance", 3), ("insurance", 3),
    ("performance", 2), ("importance", 2), ("appearance", 2),
    ("acceptance", 3), ("attendance", 3), ("guidance", 3),
    ("balance", 2), ("ambulance", 4), ("alliance", 3),
    ("appliance", 4), ("entrance", 3), ("fragrance", 4),
    ("ignorance", 4), ("tolerance", 4), ("maintenance", 3),
    ("significance", 3), ("circumstance", 3), ("abundance", 4),
]

# Everyday nouns; regular plurals are generated unless listed in NO_PLURAL.
EXTRA_NOUNS = [
    ("ache", 4), ("acre", 4), ("aisle", 4), ("altar", 4), ("amber", 4),
    ("angel", 3), ("anthem", 4), ("apron", 4), ("arch", 4), ("arrowhead", 4),
    ("ash", 4), ("aspect", 2), ("asset", 3), ("atlas", 4), ("aura", 4),
    ("avalanche", 4), ("badge", 4), ("ballot", 3), ("banner", 3),
    ("banquet", 4), ("barber", 4), ("bargain", 4), ("barrier", 3),
    ("basin", 4), ("baton", 4), ("beacon", 4), ("beam", 3), ("beast", 3),
    ("beard", 4), ("bisque", 4), ("blade", 3), ("blast", 3), ("blaze", 4),
    ("blessing", 3), ("blossom", 4), ("blueprint", 4), ("boulder", 4),
    ("bouquet", 4), ("breakthrough", 3), ("breeze", 4), ("brick", 3),
    ("bride", 3), ("broom", 4), ("bubble", 3), ("buckle", 4),
    ("bulb", 4), ("bullet", 3), ("bureau", 4), ("cellar", 4),
    ("canyon", 4), ("canvas", 4), ("carving", 4), ("catalog", 4),
    ("cattle", 3), ("caution", 3), ("cavern", 4), ("chamber", 3),
    ("chapter", 2), ("charm", 3), ("charter", 4), ("chorus", 4),
    ("cigar", 4), ("circus", 4), ("citadel", 4), ("clinic", 3),
    ("cluster", 3), ("coalition", 3), ("cobblestone", 4), ("cocoon", 4),
    ("collar", 4), ("colleague", 3), ("colony", 3), ("comet", 4),
    ("compost", 4), ("contraption", 4), ("copper", 3), ("coral", 4),
    ("cornerstone", 4), ("cottage", 4), ("courtyard", 4), ("cradle", 4),
    ("crater", 4), ("crest", 4), ("cricket", 4), ("crust", 4),
    ("culprit", 4), ("currency", 3), ("curriculum", 3), ("cushion", 4),
    ("dagger", 4), ("dairy", 4), ("dam", 4), ("debris", 4),
    ("deed", 4), ("delegate", 3), ("delegation", 3), ("delta", 4),
    ("dialogue", 3), ("diagram", 4), ("diameter", 4), ("diary", 4),
    ("dioxide", 4), ("diploma", 4), ("dispatch", 4), ("ditch", 4),
    ("dome", 4), ("donkey", 4), ("doorway", 4), ("draft", 3),
    ("dragon", 3), ("drought", 3), ("dune", 4), ("dynasty", 3),
    ("echo", 4), ("eclipse", 4), ("ecosystem", 3), ("elbow", 4),
    ("ember", 4), ("emblem", 4), ("envoy", 4), ("epidemic", 3),
    ("episode", 3), ("equator", 4), ("errand", 4), ("essayist", 4),
    ("estuary", 4), ("exhibit", 3), ("exhibition", 3), ("expedition", 3),
    ("fabric", 3), ("facade", 4), ("famine", 4), ("fate", 3),
    ("fatigue", 4), ("feat", 4), ("ferryman", 4), ("fiber", 4),
    ("fiction", 3), ("fleet", 3), ("flint", 4), ("fluid", 3),
    ("folk", 3), ("folklore", 4), ("forge", 4), ("fossil", 4),
    ("fraction", 3), ("fragment", 4), ("frontier", 3), ("frost", 4),
    ("furnace", 4), ("galaxy", 3), ("gale", 4), ("garment", 4),
    ("gazette", 4), ("gem", 4), ("glacier", 4), ("glossary", 4),
    ("gospel", 4), ("gossip", 4), ("granary", 4), ("grant", 3),
    ("gravel", 4), ("grid", 3), ("grove", 4), ("guardian", 3),
    ("guild", 4), ("gulf", 3), ("hallway", 4), ("hamlet", 4),
    ("handbook", 4), ("handle", 3), ("harness", 4), ("hatch", 4),
    ("haven", 4), ("hearth", 4), ("hedge", 4), ("heir", 4),
    ("herb", 4), ("heritage", 3), ("hinge", 4), ("hive", 4),
    ("homeland", 4), ("hymn", 4), ("iceberg", 4), ("idol", 4),
    ("ivory", 4), ("jade", 4), ("jungle", 4), ("keel", 4),
    ("kettle", 4), ("kiln", 4), ("knot", 4), ("ledge", 4),
    ("ledger", 4), ("legacy", 3), ("lens", 4), ("levee", 4),
    ("lever", 4), ("lily", 4), ("limb", 4), ("limestone", 4),
    ("linen", 4), ("lobby", 4), ("log", 3), ("loom", 4),
    ("lottery", 4), ("magnet", 4), ("manor", 4), ("mantle", 4),
    ("manuscript", 3), ("marsh", 4), ("mast", 4), ("mat", 4),
    ("meadow", 4), ("membrane", 4), ("memoir", 4), ("merit", 4),
    ("mesh", 4), ("meteor", 4), ("milestone", 4), ("mineral", 3),
    ("miracle", 3), ("moat", 4), ("molecule", 3), ("monarch", 4),
    ("monastery", 4), ("mosaic", 4), ("motive", 4), ("motto", 4),
    ("mound", 4), ("mule", 4), ("mural", 4), ("nectar", 4),
    ("niche", 4), ("nickel", 4), ("nobility", 4), ("nomad", 4),
    ("notion", 4), ("oasis", 4), ("oath", 4), ("obelisk", 4),
    ("orbit", 3), ("orchard", 4), ("ore", 4), ("organ", 3),
    ("ornament", 4), ("orphan", 4), ("outbreak", 3), ("outcome", 2),
    ("outfit", 4), ("outlet", 4), ("outline", 3), ("outpost", 4),
    ("oyster", 4), ("paddle", 4), ("pageant", 4), ("pamphlet", 4),
    ("parade", 3), ("parish", 4), ("parlor", 4), ("pasture", 4),
    ("patch", 3), ("patent", 3), ("patrol", 4), ("patron", 4),
    ("peak", 3), ("peasant", 4), ("pebble", 4), ("pedal", 4),
    ("pedestal", 4), ("peninsula", 4), ("petal", 4), ("petition", 3),
    ("pillar", 4), ("pit", 4), ("plateau", 4), ("platform", 2),
    ("plaza", 4), ("plight", 4), ("plot", 3), ("plough", 4),
    ("poetry", 3), ("pole", 3), ("pollen", 4), ("pollution", 3),
    ("porcelain", 4), ("portfolio", 4), ("poster", 4), ("pottery", 4),
    ("poverty", 3), ("prairie", 4), ("precinct", 4), ("predator", 4),
    ("premise", 4), ("prey", 4), ("privilege", 3), ("prophet", 4),
    ("prose", 4), ("protocol", 3), ("proverb", 4), ("pulse", 4),
    ("pyramid", 3), ("quarry", 4), ("quilt", 4), ("quota", 4),
    ("realm", 4), ("rebel", 3), ("rebellion", 3), ("recession", 3),
    ("reef", 4), ("refuge", 4), ("refugee", 3), ("regime", 3),
    ("rein", 4), ("relic", 4), ("remedy", 4), ("remnant", 4),
    ("reservoir", 4), ("residue", 4), ("retreat", 4), ("revenue", 3),
    ("ridge", 4), ("rifle", 3), ("riot", 4), ("ritual", 3),
    ("rivalry", 4), ("robe", 4), ("rubble", 4), ("rug", 4),
    ("saddle", 4), ("saga", 4), ("saint", 3), ("sanctuary", 4),
    ("sapphire", 4), ("scaffold", 4), ("scandal", 3), ("scent", 4),
    ("scholar", 3), ("scrap", 4), ("scroll", 4), ("sculptor", 4),
    ("seal", 3), ("seam", 4), ("sector", 3), ("sediment", 4),
    ("seminar", 4), ("sermon", 4), ("shaft", 4), ("shed", 4),
    ("shrine", 4), ("shutter", 4), ("sibling", 4), ("siege", 4),
    ("silo", 4), ("skeleton", 4), ("sketch", 4), ("slab", 4),
    ("slate", 4), ("sleeve", 4), ("slope", 3), ("smoke", 2),
    ("sod", 4), ("souvenir", 4), ("spark", 3), ("specimen", 4),
    ("spectacle", 4), ("spectrum", 3), ("spire", 4), ("spool", 4),
    ("sprout", 4), ("stack", 3), ("stall", 4), ("stanza", 4),
    ("staple", 4), ("statute", 4), ("steam", 3), ("steeple", 4),
    ("stem", 3), ("strand", 4), ("strait", 4), ("straw", 4),
    ("streak", 4), ("string", 2), ("stripe", 4), ("stroll", 4),
    ("stump", 4), ("summons", 4), ("surplus", 4), ("swarm", 4),
    ("syllable", 4), ("symphony", 4), ("symptom", 3), ("syrup", 4),
    ("tablet", 4), ("tapestry", 4), ("tariff", 4), ("tavern", 4),
    ("telegraph", 4), ("terrace", 4), ("terrain", 4), ("textile", 4),
    ("texture", 4), ("thicket", 4), ("thorn", 4), ("threshold", 4),
    ("throne", 3), ("tide", 3), ("tile", 4), ("toll", 4),
    ("tomb", 4), ("tonic", 4), ("torrent", 4), ("tract", 4),
    ("treason", 4), ("treasure", 3), ("treasury", 4), ("trek", 4),
    ("trench", 4), ("tribe", 3), ("tribute", 4), ("trough", 4),
    ("tundra", 4), ("turbine", 4), ("turf", 4), ("tutor", 4),
    ("twig", 4), ("twilight", 4), ("vault", 4), ("veil", 4),
    ("vein", 4), ("vendor", 4), ("verdict", 4), ("verse", 4),
    ("vessel", 3), ("veteran", 3), ("vicinity", 4), ("vigil", 4),
    ("vineyard", 4), ("vista", 4), ("vocabulary", 4), ("vow", 4),
    ("wagonload", 4), ("walnut", 4), ("wand", 4), ("ward", 4),
    ("wardrobe", 4), ("warfare", 4), ("warrant", 4), ("warrior", 3),
    ("watchman", 4), ("wharf", 4), ("whistle", 4), ("wick", 4),
    ("widow", 4), ("wilderness", 4), ("windshield", 4), ("wisp", 4),
    ("woe", 4), ("workload", 4), ("wreath", 4), ("wreck", 4),
    ("wrench", 4), ("yarn", 4), ("yield", 3), ("zeal", 4),
    ("zenith", 4), ("zigzag", 4),
    # animals
    ("badger", 4), ("beaver", 4), ("bison", 4), ("bat", 4), ("bull", 3),
    ("cheetah", 4), ("cobra", 4), ("colt", 4), ("coyote", 4), ("crab", 4),
    ("crane", 4), ("crocodile", 4), ("cub", 4), ("dinosaur", 4),
    ("dove", 4), ("eel", 4), ("falcon", 4), ("finch", 4), ("flamingo", 4),
    ("gazelle", 4), ("giraffe", 4), ("gorilla", 4), ("gull", 4),
    ("hamster", 4), ("hare", 4), ("hedgehog", 4), ("hen", 4),
    ("heron", 4), ("hornet", 4), ("hound", 4), ("hyena", 4),
    ("jackal", 4), ("jaguar", 4), ("kangaroo", 4), ("kitten", 4),
    ("koala", 4), ("lamb", 4), ("lark", 4), ("lemur", 4),
    ("leopard", 4), ("llama", 4), ("lobster", 4), ("locust", 4),
    ("mammoth", 4), ("mare", 4), ("mole", 4), ("moth", 4),
    ("mustang", 4), ("newt", 4), ("otter", 4), ("panda", 4),
    ("panther", 4), ("parrot", 4), ("peacock", 4), ("pelican", 4),
    ("penguin", 4), ("pheasant", 4), ("pony", 4), ("porcupine", 4),
    ("puppy", 4), ("python", 4), ("raccoon", 4), ("ram", 4),
    ("raven", 4), ("robin", 4), ("rooster", 4), ("scorpion", 4),
    ("seagull", 4), ("slug", 4), ("snail", 4), ("stallion", 4),
    ("starling", 4), ("stork", 4), ("swallow", 4), ("tadpole", 4),
    ("termite", 4), ("toad", 4), ("vulture", 4), ("walrus", 4),
    ("wasp", 4), ("weasel", 4), ("woodpecker", 4), ("zebra", 4),
    # household
    ("armchair", 4), ("bathtub", 4), ("bin", 4), ("bookcase", 4),
    ("briefcase", 4), ("calculator", 4), ("canopy", 4), ("clipboard", 4),
    ("doorbell", 4), ("doormat", 4), ("dryer", 4), ("eraser", 4),
    ("faucet", 4), ("flashlight", 4), ("folder", 4), ("grater", 4),
    ("hairbrush", 4), ("hanger", 4), ("headphone", 4), ("heater", 4),
    ("jug", 4), ("ladle", 4), ("lampshade", 4), ("mattress", 4),
    ("microwave", 4), ("mop", 4), ("mug", 4), ("notepad", 4),
    ("pillowcase", 4), ("pitcher", 4), ("radiator", 4), ("rake", 4),
    ("refrigerator", 4), ("ruler", 4), ("saucepan", 4), ("saucer", 4),
    ("screwdriver", 4), ("sink", 3), ("sponge", 4), ("stapler", 4),
    ("stool", 4), ("switch", 3), ("teapot", 4), ("teaspoon", 4),
    ("thermometer", 4), ("toaster", 4), ("toolbox", 4), ("toothbrush", 4),
    ("vase", 4), ("wheelbarrow", 4), ("whisk", 4),
    # food
    ("avocado", 4), ("bagel", 4), ("biscuit", 4), ("blueberry", 4),
    ("broth", 4), ("burger", 4), ("cashew", 4), ("cracker", 4),
    ("cranberry", 4), ("cucumber", 4), ("cupcake", 4), ("doughnut", 4),
    ("dumpling", 4), ("fig", 4), ("hamburger", 4), ("hazelnut", 4),
    ("herring", 4), ("kiwi", 4), ("lime", 4), ("mango", 4),
    ("muffin", 4), ("noodle", 4), ("olive", 4), ("omelet", 4),
    ("pancake", 4), ("peanut", 4), ("pickle", 4), ("pineapple", 4),
    ("pizza", 3), ("pretzel", 4), ("pudding", 4), ("pumpkin", 4),
    ("radish", 4), ("raisin", 4), ("raspberry", 4), ("sandwich", 3),
    ("sardine", 4), ("shrimp", 4), ("stew", 4), ("strawberry", 4),
    ("taco", 4), ("tangerine", 4), ("turnip", 4), ("waffle", 4),
    ("watermelon", 4),
    # occupations
    ("accountant", 4), ("actress", 4), ("ambassador", 3), ("analyst", 3),
    ("apprentice", 4), ("astronomer", 4), ("attendant", 4), ("auditor", 4),
    ("bartender", 4), ("biologist", 4), ("bodyguard", 4), ("bookkeeper", 4),
    ("botanist", 4), ("broker", 4), ("cashier", 4), ("chancellor", 4),
    ("chemist", 4), ("composer", 3), ("conductor", 4), ("consultant", 3),
    ("contractor", 3), ("counselor", 4), ("courier", 4), ("curator", 4),
    ("custodian", 4), ("dancer", 3), ("dean", 4), ("deputy", 3),
    ("diplomat", 4), ("economist", 3), ("educator", 4),
    ("entrepreneur", 3), ("executive", 3), ("firefighter", 4),
    ("florist", 4), ("forester", 4), ("gardener", 4), ("geologist", 4),
    ("goldsmith", 4), ("grocer", 4), ("hairdresser", 4), ("innkeeper", 4),
    ("inspector", 3), ("instructor", 3), ("interpreter", 4),
    ("inventor", 4), ("investigator", 4), ("janitor", 4), ("jeweler", 4),
    ("landlord", 4), ("lieutenant", 4), ("lifeguard", 4), ("linguist", 4),
    ("locksmith", 4), ("magician", 4), ("maid", 4), ("marshal", 4),
    ("mathematician", 4), ("mentor", 4), ("messenger", 4),
    ("navigator", 4), ("novelist", 4), ("operator", 3), ("optician", 4),
    ("paramedic", 4), ("pastor", 4), ("pharmacist", 4),
    ("philosopher", 3), ("physician", 3), ("physicist", 4),
    ("pianist", 4), ("playwright", 4), ("porter", 4), ("preacher", 4),
    ("producer", 3), ("programmer", 3), ("psychologist", 3),
    ("publisher", 3), ("ranger", 4), ("receptionist", 4),
    ("registrar", 4), ("scout", 4), ("sergeant", 4), ("sheriff", 4),
    ("shoemaker", 4), ("shopkeeper", 4), ("sociologist", 4),
    ("statistician", 4), ("superintendent", 4), ("supervisor", 3),
    ("surveyor", 4), ("technician", 3), ("therapist", 4),
    ("translator", 4), ("treasurer", 4), ("typist", 4), ("umpire", 4),
    ("usher", 4), ("violinist", 4), ("warden", 4), ("welder", 4),
    ("zoologist", 4),
    # technology
    ("algorithm", 3), ("antenna", 4), ("archive", 3), ("asteroid", 4),
    ("barcode", 4), ("browser", 4), ("byte", 4), ("chip", 3),
    ("cursor", 4), ("dashboard", 4), ("desktop", 4), ("domain", 3),
    ("download", 4), ("firewall", 4), ("gadget", 4), ("interface", 3),
    ("kernel", 4), ("laptop", 3), ("laser", 3), ("microchip", 4),
    ("modem", 4), ("module", 3), ("password", 3), ("pixel", 4),
    ("processor", 3), ("prototype", 3), ("robot", 3), ("router", 4),
    ("scanner", 4), ("sensor", 3), ("smartphone", 3), ("spreadsheet", 4),
    ("toolkit", 4), ("upload", 4), ("username", 4), ("webcam", 4),
    ("webpage", 4), ("workstation", 4),
]

EXTRA_NOUNS += [
    # abstract and miscellaneous
    ("agony", 4), ("ambiguity", 4), ("analogy", 4), ("anatomy", 4),
    ("anomaly", 4), ("aroma", 4), ("array", 3), ("artifact", 3),
    ("ascent", 4), ("assault", 3), ("asylum", 4), ("autonomy", 4),
    ("backlash", 4), ("ballad", 4), ("bias", 3), ("bliss", 4),
    ("blunder", 4), ("bounty", 4), ("boycott", 4), ("brawl", 4),
    ("breadth", 4), ("brink", 4), ("bulk", 4), ("bypass", 4),
    ("catastrophe", 4), ("census", 4), ("chaos", 3), ("charisma", 4),
    ("chronicle", 4), ("clause", 3), ("climax", 4), ("cohort", 4),
    ("coincidence", 4), ("comedy", 3), ("commodity", 4), ("conquest", 4),
    ("consensus", 3), ("contempt", 4), ("context", 2), ("contour", 4),
    ("covenant", 4), ("craving", 4), ("creed", 4), ("critique", 4),
    ("crusade", 4), ("custody", 4), ("decree", 4), ("deficit", 3),
    ("dilemma", 3), ("diplomacy", 4), ("discourse", 4), ("discretion", 4),
    ("disguise", 4), ("dismay", 4), ("dissent", 4), ("doctrine", 3),
    ("dominion", 4), ("downfall", 4), ("dread", 4), ("duel", 4),
    ("embargo", 4), ("empathy", 4), ("emphasis", 3), ("enigma", 4),
    ("ensemble", 4), ("enterprise", 3), ("enthusiasm", 3), ("entity", 3),
    ("envy", 4), ("epoch", 4), ("equity", 4), ("exile", 4),
    ("exodus", 4), ("expanse", 4), ("expertise", 3), ("facet", 4),
    ("fallacy", 4), ("fervor", 4), ("feud", 4), ("fiasco", 4),
    ("flair", 4), ("fluke", 4), ("folly", 4), ("forum", 3),
    ("franchise", 4), ("frenzy", 4), ("friction", 4), ("fusion", 4),
    ("gamut", 4), ("genesis", 4), ("genre", 3), ("gist", 4),
    ("grievance", 4), ("grudge", 4), ("havoc", 4), ("hazard", 3),
    ("hierarchy", 3), ("hindsight", 4), ("homage", 4), ("horde", 4),
    ("hub", 4), ("hysteria", 4), ("ideology", 3), ("idiom", 4),
    ("imagery", 4), ("impasse", 4), ("impetus", 4), ("incentive", 3),
    ("inception", 4), ("inertia", 4), ("influx", 4), ("insight", 3),
    ("instinct", 3), ("intellect", 4), ("intrigue", 4), ("intuition", 4),
    ("inventory", 4), ("irony", 4), ("jargon", 4), ("jeopardy", 4),
    ("kinship", 4), ("landmark", 4), ("lapse", 4), ("lore", 4),
    ("magnitude", 3), ("mandate", 3), ("mantra", 4), ("maxim", 4),
    ("maze", 4), ("medley", 4), ("memo", 4), ("menace", 4),
    ("metaphor", 4), ("midst", 4), ("mindset", 4), ("mirage", 4),
    ("mishap", 4), ("momentum", 3), ("monopoly", 4), ("morale", 4),
    ("mortgage", 3), ("motif", 4), ("narrative", 3), ("nostalgia", 4),
    ("nuance", 4), ("oblivion", 4), ("odyssey", 4), ("onset", 4),
    ("optimism", 4), ("ordeal", 4), ("outset", 4), ("ovation", 4),
    ("overhaul", 4), ("oversight", 4), ("paradigm", 4), ("paradox", 4),
    ("parity", 4), ("pastime", 4), ("peril", 4), ("persona", 4),
    ("pessimism", 4), ("pinnacle", 4), ("plea", 4), ("plunder", 4),
    ("posture", 4), ("precedent", 4), ("predicament", 4),
    ("prestige", 4), ("pretext", 4), ("prophecy", 4),
    ("protagonist", 4), ("prowess", 4), ("proxy", 4), ("quest", 3),
    ("quirk", 4), ("rally", 3), ("rampage", 4), ("rapport", 4),
    ("rationale", 4), ("remorse", 4), ("renaissance", 4),
    ("rhetoric", 4), ("rigor", 4), ("riddle", 4), ("ripple", 4),
    ("roster", 4), ("rumor", 3), ("sarcasm", 4), ("satire", 4),
    ("scenario", 3), ("scrutiny", 4), ("sentiment", 3),
    ("showdown", 4), ("skirmish", 4), ("slang", 4), ("slogan", 4),
    ("solace", 4), ("solidarity", 4), ("sovereignty", 4),
    ("splendor", 4), ("stalemate", 4), ("stamina", 4), ("stance", 3),
    ("standpoint", 4), ("stature", 4), ("stigma", 4), ("stimulus", 4),
    ("strife", 4), ("surge", 3), ("suspense", 4), ("tactic", 3),
    ("tally", 4), ("tangent", 4), ("temperament", 4), ("tempo", 4),
    ("tenant", 4), ("tenure", 4), ("testament", 4), ("testimony", 4),
    ("theorem", 4), ("thesis", 4), ("trait", 3), ("trajectory", 4),
    ("trauma", 4), ("trend", 2), ("turmoil", 4), ("upheaval", 4),
    ("uprising", 4), ("uproar", 4), ("utopia", 4), ("venue", 3),
    ("whim", 4), ("wit", 4),
    # civic and infrastructure nouns
    ("academy", 3), ("assembly", 3), ("institute", 3), ("senate", 3),
    ("cooperative", 4), ("observatory", 4), ("railway", 3),
    ("causeway", 4), ("aqueduct", 4), ("forecast", 3), ("manifesto", 4),
    ("memorandum", 4), ("ordinance", 4), ("referendum", 4),
    ("subsidy", 4), ("auction", 4), ("content", 2),
]

EXTRA_WORDS += [
    # verb forms and adjectives used by the sample corpus
    ("acknowledged", 4), ("auctioned", 4), ("catalogued", 4),
    ("commissioned", 4), ("debated", 4), ("demolish", 4),
    ("demolished", 4), ("deserve", 3), ("deserved", 4),
    ("documented", 4), ("excavated", 4), ("flooded", 4),
    ("inherited", 4), ("mapped", 4), ("photographed", 4),
    ("purchased", 3), ("renovated", 4), ("shaped", 3),
    ("sketched", 4), ("surveyed", 4), ("contents", 3),
    ("bustling", 4), ("crumbling", 4), ("gleaming", 4),
    ("historic", 3), ("neighboring", 4), ("remote", 3),
    ("spacious", 4), ("weathered", 4), ("diligently", 4),
    ("patiently", 4), ("repeatedly", 3), ("secretly", 4),
    ("swiftly", 4), ("catalog", 4), ("demolition", 4),
]

# Mass nouns and irregulars in EXTRA_NOUNS that take no generated plural.
NO_PLURAL = {
    "amber", "ash", "bisque", "cattle", "caution", "cement", "compost",
    "copper", "coral", "debris", "fate", "fatigue", "fiction", "folk",
    "folklore", "frost", "gossip", "gravel", "ivory", "jade", "linen",
    "nectar", "nobility", "ore", "pollen", "pollution", "porcelain",
    "pottery", "poverty", "poetry", "prey", "prose", "rubble", "sediment",
    "smoke", "sod", "steam", "straw", "summons", "syrup", "terrain",
    "treason", "tundra", "turf", "twilight", "vicinity", "vocabulary",
    "warfare", "wilderness", "woe", "workload", "yarn", "zeal", "zenith",
    "wagonload", "mesh", "merit", "mural", "echo", "oasis", "ferryman",
    "watchman", "bison", "broth", "herring", "shrimp", "agony", "ambiguity",
    "anatomy", "aroma", "ascent", "asylum", "autonomy", "backlash", "bias",
    "bliss", "bounty", "breadth", "brink", "bulk", "chaos", "charisma",
    "consensus", "contempt", "custody", "diplomacy", "discourse",
    "discretion", "dismay", "dissent", "dominion", "downfall", "dread",
    "emphasis", "empathy", "enthusiasm", "envy", "equity", "exile",
    "exodus", "expertise", "fervor", "folly", "frenzy", "friction",
    "fusion", "gamut", "genesis", "gist", "havoc", "hindsight", "homage",
    "hysteria", "imagery", "impetus", "inertia", "influx", "intellect",
    "intrigue", "irony", "jargon", "jeopardy", "kinship", "lore",
    "magnitude", "midst", "mindset", "momentum", "morale", "nostalgia",
    "oblivion", "onset", "optimism", "outset", "oversight", "parity",
    "peril", "pessimism", "plunder", "prestige", "prowess", "rapport",
    "remorse", "renaissance", "rhetoric", "rigor", "rumor", "sarcasm",
    "satire", "scrutiny", "sentiment", "slang", "solace", "solidarity",
    "sovereignty", "splendor", "stamina", "stature", "stigma", "stimulus",
    "strife", "suspense", "tempo", "tenure", "testimony", "thesis",
    "trauma", "turmoil", "upheaval", "uproar", "utopia", "wit", "genre",
    "midwife", "census", "climax", "emphasis",
}

# Comparative and superlative forms for common gradable adjectives.
COMPARATIVES = [
    ("better", 1), ("best", 1), ("worse", 2), ("worst", 2),
    ("bigger", 2), ("biggest", 2), ("smaller", 2), ("smallest", 2),
    ("larger", 2), ("largest", 2), ("greater", 2), ("greatest", 2),
    ("higher", 1), ("highest", 2), ("lower", 2), ("lowest", 2),
    ("longer", 2), ("longest", 2), ("shorter", 3), ("shortest", 3),
    ("older", 2), ("oldest", 2), ("newer", 3), ("newest", 3),
    ("younger", 2), ("youngest", 3), ("stronger", 2), ("strongest", 3),
    ("weaker", 3), ("weakest", 4), ("faster", 2), ("fastest", 3),
    ("slower", 3), ("slowest", 4), ("earlier", 2), ("earliest", 3),
    ("later", 1), ("latest", 2), ("deeper", 3), ("deepest", 3),
    ("wider", 3), ("widest", 4), ("narrower", 4), ("richer", 3),
    ("richest", 3), ("poorer", 4), ("poorest", 3), ("cheaper", 3),
    ("cheapest", 4), ("cleaner", 4), ("cleanest", 4), ("colder", 3),
    ("coldest", 4), ("warmer", 3), ("warmest", 4), ("hotter", 3),
    ("hottest", 3), ("cooler", 3), ("coolest", 4), ("brighter", 4),
    ("brightest", 4), ("darker", 3), ("darkest", 4), ("lighter", 3),
    ("heavier", 3), ("heaviest", 4), ("easier", 2), ("easiest", 3),
    ("harder", 2), ("hardest", 3), ("simpler", 3), ("simplest", 4),
    ("safer", 3), ("safest", 4), ("closer", 2), ("closest", 3),
    ("nearer", 4), ("nearest", 3), ("taller", 4), ("tallest", 4),
    ("thinner", 4), ("thicker", 4), ("smoother", 4), ("rougher", 4),
    ("sharper", 4), ("softer", 4), ("louder", 4), ("loudest", 4),
    ("quieter", 4), ("happier", 3), ("happiest", 4), ("busier", 4),
    ("busiest", 4), ("wealthier", 4), ("healthier", 4), ("wiser", 4),
    ("finer", 4), ("finest", 3), ("fewer", 2), ("fewest", 4),
]

EXTRA_WORDS += COMPARATIVES

EXTRA_WORDS += [
    # more verbs in base form (inflections added explicitly where common)
    ("abandon", 3), ("abandoned", 3), ("absorb", 3), ("absorbed", 4),
    ("accelerate", 4), ("accommodate", 4), ("accompany", 3),
    ("accompanied", 3), ("accumulate", 4), ("acknowledge", 3),
    ("acquire", 3), ("acquired", 3), ("activate", 4), ("amend", 4),
    ("anticipate", 3), ("arise", 3), ("arose", 4), ("arisen", 4),
    ("assemble", 3), ("assembled", 3), ("assert", 4), ("assess", 3),
    ("assign", 3), ("assigned", 3), ("associate", 3), ("associated", 2),
    ("assure", 3), ("attain", 4), ("attract", 3), ("attracted", 3),
    ("await", 4), ("awaken", 4), ("behave", 3), ("bestow", 4),
    ("betray", 4), ("bid", 4), ("bind", 4), ("bound", 3),
    ("bless", 4), ("blessed", 4), ("bloom", 4), ("blow", 3),
    ("blew", 4), ("blown", 4), ("boast", 4), ("bolster", 4),
    ("boost", 3), ("broaden", 4), ("cast", 3), ("cater", 4),
    ("cling", 4), ("clung", 4), ("collapse", 3), ("collapsed", 3),
    ("collide", 4), ("commence", 4), ("commit", 3), ("committed", 3),
    ("compel", 4), ("compelled", 4), ("compensate", 4), ("compile", 4),
    ("compose", 3), ("composed", 3), ("conceal", 4), ("concede", 4),
    ("conceive", 4), ("condemn", 4), ("conduct", 2), ("conducted", 3),
    ("confess", 4), ("confine", 4), ("confront", 4), ("consent", 4),
    ("conserve", 4), ("consult", 3), ("consume", 3), ("consumed", 3),
    ("contemplate", 4), ("contend", 4), ("contract", 2), ("convey", 4),
    ("correspond", 4), ("crave", 4), ("creep", 4), ("crept", 4),
    ("cultivate", 4), ("dare", 3), ("dared", 4), ("dash", 4),
    ("dazzle", 4), ("decay", 4), ("deceive", 4), ("dedicate", 4),
    ("dedicated", 3), ("deem", 4), ("defy", 4), ("delegate", 3),
    ("delete", 4), ("deliberate", 4), ("depict", 4), ("deploy", 4),
    ("deprive", 4), ("derive", 3), ("derived", 3), ("descend", 4),
    ("deserve", 3), ("designate", 4), ("detect", 3), ("detected", 3),
    ("deteriorate", 4), ("devote", 4), ("devoted", 3), ("dictate", 4),
    ("disclose", 4), ("dispose", 4), ("disrupt", 4), ("dissolve", 4),
    ("distinguish", 3), ("distract", 4), ("distribute", 3),
    ("distributed", 3), ("dominate", 3), ("dwell", 4), ("dwelt", 4),
    ("elevate", 4), ("eliminate", 3), ("embrace", 3), ("embraced", 4),
    ("enable", 3), ("enabled", 3), ("enact", 4), ("enclose", 4),
    ("endorse", 4), ("engage", 3), ("engaged", 3), ("enhance", 3),
    ("enhanced", 3), ("enrich", 4), ("enroll", 4), ("ensure", 2),
    ("ensured", 4), ("entail", 4), ("entitle", 4), ("entitled", 3),
    ("envision", 4), ("erect", 4), ("erected", 4), ("erode", 4),
    ("evaluate", 3), ("evoke", 4), ("evolve", 3), ("evolved", 3),
    ("exaggerate", 4), ("excavate", 4), ("exclude", 4), ("execute", 3),
    ("exert", 4), ("exhaust", 4), ("expel", 4), ("exploit", 4),
    ("expose", 3), ("exposed", 3), ("facilitate", 4), ("fascinate", 4),
    ("fasten", 4), ("favor", 3), ("favored", 4), ("feature", 2),
    ("featured", 3), ("flourish", 4), ("fluctuate", 4), ("forge", 4),
    ("formulate", 4), ("foster", 4), ("gaze", 4), ("gazed", 4),
    ("generate", 2), ("generated", 3), ("glance", 4), ("glanced", 4),
    ("govern", 3), ("governed", 4), ("graze", 4), ("halt", 4),
    ("haul", 4), ("heed", 4), ("hinder", 4), ("hover", 4),
    ("illuminate", 4), ("implement", 3), ("implemented", 3),
    ("imply", 3), ("implied", 4), ("impose", 3), ("imposed", 3),
    ("incorporate", 3), ("induce", 4), ("infer", 4), ("inhabit", 4),
    ("inherit", 4), ("inhibit", 4), ("initiate", 3), ("insert", 4),
    ("install", 3), ("installed", 3), ("integrate", 3), ("interact", 3),
    ("interpret", 3), ("invade", 3), ("invaded", 4), ("invoke", 4),
    ("isolate", 4), ("isolated", 3), ("justify", 3), ("kneel", 4),
    ("knelt", 4), ("lament", 4), ("launch", 2), ("launched", 2),
    ("lean", 3), ("leaned", 4), ("leap", 4), ("leaped", 4),
    ("linger", 4), ("locate", 3), ("located", 2), ("lure", 4),
    ("manipulate", 4), ("mediate", 4), ("merge", 4), ("merged", 4),
    ("migrate", 4), ("mold", 4), ("mourn", 4), ("navigate", 4),
    ("nominate", 4), ("nominated", 4), ("nourish", 4), ("nurture", 4),
    ("obey", 4), ("oblige", 4), ("obscure", 4), ("offset", 4),
    ("omit", 4), ("omitted", 4), ("orbit", 3), ("originate", 4),
    ("overlook", 4), ("oversee", 4), ("overturn", 4), ("overwhelm", 4),
    ("pave", 4), ("paved", 4), ("perceive", 3), ("perceived", 4),
    ("pertain", 4), ("plead", 4), ("pledge", 4), ("plunge", 4),
    ("ponder", 4), ("portray", 4), ("pose", 3), ("posed", 4),
    ("precede", 4), ("preach", 4), ("presume", 4), ("prevail", 4),
    ("probe", 4), ("proclaim", 4), ("prolong", 4), ("prompt", 3),
    ("prosper", 4), ("provoke", 4), ("pursue", 3), ("pursued", 4),
    ("quote", 3), ("quoted", 4), ("radiate", 4), ("ratify", 4),
    ("reap", 4), ("reassure", 4), ("reckon", 4), ("reconcile", 4),
    ("recruit", 4), ("rectify", 4), ("redeem", 4), ("refine", 4),
    ("refrain", 4), ("reign", 4), ("reinforce", 4), ("render", 4),
    ("renew", 4), ("renowned", 4), ("repay", 4), ("repeal", 4),
    ("reproduce", 4), ("resume", 4), ("retain", 3), ("retained", 4),
    ("retrieve", 4), ("reverse", 3), ("revise", 4), ("revive", 4),
    ("roam", 4), ("roar", 4), ("rust", 4), ("scatter", 4),
    ("scattered", 3), ("scan", 4), ("scanned", 4), ("scold", 4),
    ("scrub", 4), ("sculpt", 4), ("shatter", 4), ("shed", 4),
    ("shiver", 4), ("shrug", 4), ("sigh", 4), ("signify", 4),
    ("soar", 4), ("sob", 4), ("sow", 4), ("specify", 3),
    ("specified", 3), ("speculate", 4), ("spoil", 4), ("sprinkle", 4),
    ("stare", 3), ("stared", 4), ("steer", 4), ("stir", 4),
    ("stirred", 4), ("stumble", 4), ("stumbled", 4), ("submit", 3),
    ("submitted", 3), ("subside", 4), ("sustain", 3), ("sustained", 3),
    ("swell", 4), ("tremble", 4), ("trim", 4), ("trimmed", 4),
    ("tuck", 4), ("undergo", 3), ("underwent", 4), ("undermine", 4),
    ("undertake", 4), ("unfold", 4), ("unveil", 4), ("uphold", 4),
    ("urge", 3), ("urged", 3), ("utilize", 4), ("utter", 4),
    ("venture", 4), ("verify", 3), ("verified", 4), ("wail", 4),
    ("whirl", 4), ("wither", 4), ("yearn", 4),
    # more adjectives
    ("abrupt", 4), ("absent", 3), ("abstract", 3), ("absurd", 4),
    ("acute", 4), ("adjacent", 4), ("adverse", 4), ("aerial", 4),
    ("aggressive", 3), ("agile", 4), ("alert", 3), ("alien", 4),
    ("ample", 4), ("annualized", 4), ("anonymous", 4), ("awkward", 4),
    ("barren", 4), ("bleak", 4), ("blunt", 4), ("blurry", 4),
    ("brisk", 4), ("brittle", 4), ("bulky", 4), ("candid", 4),
    ("coarse", 4), ("cognitive", 4), ("coherent", 4), ("colonial", 3),
    ("colossal", 4), ("compact", 4), ("compatible", 4), ("concise", 4),
    ("concrete", 3), ("cordial", 4), ("corporate", 3), ("cosmic", 4),
    ("cozy", 4), ("crisp", 4), ("crude", 4), ("cumbersome", 4),
    ("cunning", 4), ("decent", 3), ("deliberate", 4), ("delicate", 3),
    ("devout", 4), ("diligent", 4), ("dismal", 4), ("distant", 2),
    ("divine", 4), ("dominant", 3), ("drastic", 4), ("dynamic", 3),
    ("earnest", 4), ("eccentric", 4), ("elastic", 4), ("eloquent", 4),
    ("eminent", 4), ("epic", 4), ("erratic", 4), ("ethnic", 3),
    ("exotic", 4), ("explicit", 4), ("exquisite", 4), ("feeble", 4),
    ("fertile", 4), ("fierce", 3), ("fiscal", 4), ("fond", 4),
    ("fragile", 4), ("frail", 4), ("frank", 4), ("frantic", 4),
    ("futile", 4), ("gallant", 4), ("glorious", 3), ("gloomy", 4),
    ("gracious", 4), ("grand", 3), ("grim", 4), ("hasty", 4),
    ("hazardous", 4), ("hostile", 4), ("humid", 4), ("imminent", 4),
    ("immune", 4), ("imperial", 3), ("implicit", 4), ("inclined", 4),
    ("infamous", 4), ("infinite", 4), ("ingenious", 4), ("inherent", 4),
    ("inland", 4), ("innovative", 3), ("intact", 4), ("intricate", 4),
    ("ironic", 4), ("jolly", 4), ("judicial", 4), ("lavish", 4),
    ("legitimate", 4), ("liable", 4), ("liberal", 3), ("literary", 3),
    ("lively", 3), ("lone", 4), ("lush", 4), ("luxurious", 4),
    ("magnetic", 4), ("magnificent", 3), ("makeshift", 4),
    ("medieval", 3), ("mellow", 4), ("memorable", 4), ("metropolitan", 4),
    ("mighty", 3), ("mobile", 3), ("mundane", 4), ("municipal", 4),
    ("mutual", 3), ("naive", 4), ("naval", 4), ("notable", 3),
    ("notorious", 4), ("novel", 2), ("obsolete", 4), ("optical", 4),
    ("oral", 4), ("ornate", 4), ("orthodox", 4), ("outdated", 4),
    ("overdue", 4), ("parallel", 3), ("peculiar", 4), ("pending", 4),
    ("perpetual", 4), ("persistent", 4), ("pivotal", 4), ("placid", 4),
    ("pointless", 4), ("portable", 4), ("potent", 4), ("pragmatic", 4),
    ("premature", 4), ("prestigious", 4), ("prominent", 3),
    ("prone", 4), ("quaint", 4), ("radical", 3), ("random", 3),
    ("rational", 3), ("relevant", 3), ("renewable", 4), ("robust", 3),
    ("rugged", 4), ("rustic", 4), ("savage", 4), ("scenic", 4),
    ("scarlet", 4), ("seismic", 4), ("serene", 4), ("shrewd", 4),
    ("sleek", 4), ("slender", 4), ("sluggish", 4), ("solemn", 4),
    ("somber", 4), ("sovereign", 4), ("stark", 4), ("stationary", 4),
    ("statistical", 3), ("stern", 4), ("stout", 4), ("strategic", 3),
    ("stubborn", 4), ("sturdy", 4), ("subtle", 3), ("superficial", 4),
    ("swift", 3), ("tactical", 4), ("tangible", 4), ("tepid", 4),
    ("thermal", 4), ("thriving", 4), ("trivial", 4), ("turbulent", 4),
    ("ultimate", 3), ("unanimous", 4), ("uneven", 4), ("untimely", 4),
    ("upcoming", 3), ("uplifting", 4), ("vacant", 4), ("vague", 4),
    ("vain", 4), ("verbose", 4), ("viable", 4), ("vibrant", 4),
    ("vigorous", 4), ("vivid", 4), ("vocal", 4), ("volatile", 4),
    ("vulnerable", 3), ("wary", 4), ("weary", 4), ("wholesale", 4),
    ("wicked", 4), ("worthy", 3), ("zealous", 4),
]
