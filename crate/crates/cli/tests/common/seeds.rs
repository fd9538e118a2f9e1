//! Hand-written seed sentences, one pool per language, used by the Markov
//! expander in `synth`. Each pool keeps to its own vocabulary and topic so
//! cross-language n-gram overlap stays low; the English pool deliberately
//! repeats a handful of entity names so borrowed-name probes have something
//! to collide with.

pub const EN: &[&str] = &[
    "the morning train from London arrives at the old station before eight",
    "she borrowed a novel by George Orwell from the village library",
    "the castle at Windsor stood grey and quiet above the river",
    "an engineer from Microsoft visited the school to talk about computers",
    "the librarian kept the essays of George Orwell on the highest shelf",
    "my uncle worked for Microsoft before he moved back to the village",
    "the road to Windsor follows the river through green meadows",
    "every summer the choir travels to London for the festival",
    "the teacher read George Orwell aloud while rain tapped the windows",
    "a letter from London waited on the kitchen table all week",
    "the new office of Microsoft overlooks the market square",
    "tourists walk from the station to Windsor along the towpath",
    "the bookshop near the bridge sells old maps of London",
    "nobody in the village had met a writer like George Orwell",
    "the evening train to London was late again last night",
    "children from the school visited the castle at Windsor in spring",
    "the baker lights his ovens before the first light of day",
    "a cold wind moved through the orchard and shook the apples",
    "the river rises slowly after a week of steady rain",
    "she keeps her garden tidy even in the depth of winter",
    "the old clock in the hall strikes nine every evening",
    "farmers bring their carts to the market square on fridays",
    "the lamplighter knew every lane and every gate in the village",
    "a grey cat sleeps in the window of the bakery",
    "the schoolmaster wrote the lesson on the board in chalk",
    "heavy fog settled over the river before the ferry crossed",
    "the carpenter mended the church door after the storm",
    "wild geese fly south over the valley every autumn",
    "the postman leaves letters in the box by the green gate",
    "her grandmother told stories by the fire on winter nights",
    "the miller grinds the wheat when the stream runs high",
    "boys played cricket on the green until the light failed",
    "the innkeeper poured ale for the travellers from the north",
    "a narrow path leads from the mill to the water meadow",
    "the church bells rang across the fields on sunday morning",
    "she sells eggs and butter at the market every week",
    "the blacksmith shoes the horses in the yard by the forge",
    "snow covered the lane and the children built a fort",
    "the gardener prunes the roses before the first frost",
    "an old map of the county hangs in the parish hall",
    "the shepherd counts his flock at dusk on the hill",
    "rain fell softly on the roofs of the quiet village",
    "the ferryman waits by the landing when the bell rings",
    "a kettle whistled on the stove while she wrote letters",
    "the harvest supper filled the barn with song and light",
    "he reads the newspaper from London every saturday afternoon",
    "the mayor of London opened the new bridge at Windsor in june",
    "George Orwell lived for a time in a narrow street in London",
    "Microsoft sent a young engineer to the fair at Windsor",
    "students read George Orwell on the train from London to the coast",
    "a sudden gale scattered fishing boats below the castle at Windsor",
    "the committee in London approved a budget for repairing the town clock",
    "astronomers at Windsor watched a comet cross the northern sky",
    "her experiment for Microsoft measured how quickly ice melts in salt water",
    "London critics praised the difficult symphony at its first performance",
    "two cyclists raced from Windsor down the coast road past the dunes",
    "thunder rolled over the moor while hikers hurried home",
    "the London museum displayed ancient coins found beneath the abbey",
    "a journalist from the London paper interviewed the retiring stationmaster",
    "engineers tested the new turbine beside the waterfall",
    "the chess club read George Orwell above the chemist shop on tuesdays",
    "loaves of dark rye cooled on racks behind the counter",
    "a diver photographed old anchors beneath the bridge at Windsor",
    "the council debated plans for a wider harbour wall",
    "students sketched fossils in the quiet gallery after lunch",
    "the vineyard near Windsor produced a pale sweet wine",
    "a locksmith repaired the vestry door before the wedding",
    "telegraph wires carried news from London along the embankment",
    "the physician prescribed rest and broth for the fevered child",
    "sailors mended canvas sails under the dockyard lamps",
    "an apprentice at Microsoft tested the new machines in the workshop",
    "the debate society argued about George Orwell until the hall closed",
    "surveyors marked the route for the new canal through the fen",
    "a beekeeper checked the hives behind the walled orchard",
    "the printing press in London clattered late into the evening",
    "the journalist from London interviewed sailors about the storm",
    "a Microsoft laboratory tested the new turbine beside the river",
    "the museum at Windsor displayed coins found beneath the abbey",
    "George Orwell described the printing press in his London essays",
    "the orchestra from London rehearsed in the abbey until midnight",
    "engineers from Microsoft surveyed the route for the new canal",
    "the council of Windsor approved a budget for the harbour wall",
    "students from London sketched fossils in the gallery after lunch",
    "a lecture on George Orwell filled the parish hall on tuesday",
    "the train to Windsor carried crates of brass fittings and canvas",
    "the London office of Microsoft announced the results on tuesday",
    "George Orwell took the train from London to Windsor in october",
    "the Windsor road to London was closed after the flood",
    "Microsoft opened a reading room in London for the students",
    "the essays of George Orwell arrived at the Windsor library in crates",
];

pub const FR: &[&str] = &[
    "le cuisinier prépare une soupe de poisson chaque vendredi soir",
    "les bateaux rentrent au port avant la tombée de la nuit",
    "elle achète du pain frais à la boulangerie du quai",
    "le marché aux poissons ouvre très tôt le samedi matin",
    "une odeur de café monte dans la ruelle étroite",
    "les pêcheurs réparent leurs filets sur la jetée de pierre",
    "la mer devient grise quand le vent du large se lève",
    "nous mangeons des huîtres avec du citron au bord de l'eau",
    "le phare éclaire la baie pendant toute la nuit d'hiver",
    "la vieille ville garde ses remparts face à la mer",
    "il verse la sauce sur le plat avant de servir",
    "les mouettes suivent le bateau qui rentre au port",
    "elle coupe les légumes du jardin pour la soupe du soir",
    "le boulanger sort les baguettes du four à l'aube",
    "un voilier blanc glisse lentement devant la plage déserte",
    "le fromager affine ses tomes dans une cave fraîche",
    "la recette de la tarte vient de sa grand-mère",
    "les vagues déposent des coquillages sur le sable clair",
    "on sert le cidre frais dans des bols de terre",
    "la marée descend et découvre les rochers noirs",
    "le chef goûte le bouillon et ajoute un peu de sel",
    "des filets de pêche sèchent le long du mur blanc",
    "la cloche du port sonne quand la brume arrive",
    "il fait griller les sardines sur des braises douces",
    "le jardin potager donne des tomates tout l'été",
    "une barque bleue dort au fond de la crique",
    "elle pétrit la pâte sur la table de bois",
    "les enfants ramassent des crabes entre les rochers",
    "le vin blanc accompagne les moules et les frites",
    "la tempête a poussé les bateaux vers le vieux port",
    "on cueille les pommes du verger derrière la ferme",
    "le marin raconte ses voyages au café du port",
    "la soupe mijote doucement sur le feu de la cuisine",
    "des lanternes éclairent la terrasse pendant le repas du soir",
    "le miel du marché vient des collines de lavande",
    "la falaise domine une plage de galets gris",
    "il range les casiers à homards sur le quai",
    "une brise légère porte l'odeur des algues jusqu'à la place",
    "le four à pain chauffe depuis le petit matin",
    "les oliviers du sud donnent une huile dorée",
    "elle dresse la table avec des assiettes en faïence",
    "le retour des barques annonce le marché du lendemain",
    "un ragoût de poisson réchauffe les soirs de tempête",
    "la lumière du phare traverse la pluie fine",
];

pub const DE: &[&str] = &[
    "der Zug fährt langsam durch das enge Tal in die Berge",
    "am Bahnhof wartet eine alte Dampflok auf die Reisenden",
    "die Seilbahn schwebt über den verschneiten Hängen des Gipfels",
    "wir wandern am Morgen über die Alm zum klaren Bergsee",
    "der Schaffner prüft die Fahrkarten kurz nach der Abfahrt",
    "über dem Tal hängen schwere Wolken voller Schnee",
    "die Hütte am Grat bietet Suppe und warmen Tee",
    "der Nachtzug nach Wien hält nur an drei Bahnhöfen",
    "im Herbst färben sich die Wälder an den Hängen rot",
    "die Lokomotive zieht schwere Wagen über den alten Pass",
    "vom Gipfel sieht man das ganze Tal im Morgenlicht",
    "der Wanderer füllt seine Flasche an der kalten Quelle",
    "auf dem Bahnsteig riecht es nach Kaffee und Schnee",
    "die Brücke spannt sich hoch über die wilde Schlucht",
    "wir erreichen die Hütte kurz vor dem großen Gewitter",
    "der Zug aus dem Süden bringt Gäste für das Bergfest",
    "Steinböcke stehen still am Rand der hohen Felsen",
    "die Gleise glänzen im Regen hinter dem kleinen Bahnhof",
    "ein schmaler Pfad führt durch den dunklen Tannenwald",
    "die Bergbahn bringt die Skifahrer früh auf den Hang",
    "der Lawinendienst sperrt am Mittag den oberen Weg",
    "im Speisewagen klirren die Tassen bei jeder Kurve",
    "das Echo trägt den Pfiff der Lok durch das Tal",
    "die Sennerin treibt die Kühe am Abend in den Stall",
    "frischer Schnee knirscht unter den schweren Stiefeln",
    "der Bergführer kennt jede Spalte im alten Gletscher",
    "am Fenster zieht die weiße Landschaft langsam vorbei",
    "die Fahrkarte nach Zermatt liegt auf dem Küchentisch",
    "unter der Brücke rauscht der Fluss aus den Bergen",
    "der Winter schließt die hohen Pässe bis zum Mai",
    "wir teilen Brot und Käse auf der sonnigen Bank",
    "die Signale springen auf grün und der Zug rollt an",
    "Nebel steigt am Abend aus dem feuchten Talgrund",
    "die Wanderkarte zeigt einen steilen Weg zur Scharte",
    "im Tunnel wird das Rattern der Räder lauter",
    "eine Gämse springt leicht über das graue Geröll",
    "der Bahnwärter grüßt den letzten Zug des Tages",
    "auf der Alm blühen Enzian und wilder Thymian",
    "das Gepäck der Gäste stapelt sich auf dem Karren",
    "die Laterne des Schaffners schwankt durch den dunklen Gang",
    "morgens liegt Raureif auf den Dächern des Dorfes",
    "der Proviant für die Tour liegt im alten Rucksack",
    "hinter dem Pass beginnt das Land der tiefen Seen",
    "die Glocken der Herde klingen weit über die Weide",
];

pub const ES: &[&str] = &[
    "el mercado abre temprano cuando llega la fruta de la huerta",
    "las nubes traen lluvia fresca desde la sierra cercana",
    "la vendedora coloca naranjas y limones sobre la mesa",
    "el sol de agosto calienta las calles del pueblo blanco",
    "compramos aceitunas y queso para la cena del domingo",
    "el viento de poniente levanta polvo en la plaza",
    "los tomates maduran despacio en el huerto del abuelo",
    "la tormenta de verano llenó las acequias en una hora",
    "el panadero vende hogazas calientes junto a la fuente",
    "en otoño las primeras lluvias despiertan el campo seco",
    "la abuela escoge pimientos rojos para el guiso",
    "el granizo golpeó los tejados durante la madrugada",
    "los melones llegan en carro desde la vega del río",
    "hace frío en enero cuando baja la niebla al valle",
    "el pescadero grita sus precios bajo el toldo verde",
    "las golondrinas vuelven a la plaza con la primavera",
    "vendemos miel de romero en tarros pequeños",
    "el calor de la tarde vacía las calles del centro",
    "la feria del pueblo trae puestos de especias y dulces",
    "una brisa suave mueve los toldos del mercado",
    "el agricultor mira el cielo y teme por la cosecha",
    "las cerezas tempranas se venden antes del mediodía",
    "llueve sobre los campos y huele a tierra mojada",
    "el queso curado de oveja gana premios cada año",
    "la escarcha cubre los tejados en las mañanas de invierno",
    "los vecinos comentan el tiempo junto al puesto de flores",
    "el azafrán se guarda en latas detrás del mostrador",
    "la sequía de julio agrietó la tierra de la vega",
    "traemos almendras y avellanas de los árboles del secano",
    "el trueno sonó lejos mientras cerrábamos el puesto",
    "las uvas de la viña llenan los cestos de mimbre",
    "el relente de la noche refresca las macetas del patio",
    "la plaza huele a pan tostado los sábados por la mañana",
    "el arco iris cruzó el valle después del aguacero",
    "los higos maduros atraen avispas al puesto de fruta",
    "la nieve de la sierra se ve desde el mercado",
    "el aceite nuevo se prueba con pan en noviembre",
    "una nube negra tapó el sol sobre los tejados",
    "las castañas se asan en un bidón junto a la iglesia",
    "el rocío moja las lechugas recién cortadas",
    "los ajos trenzados cuelgan de la viga del puesto",
    "el levante sopla fuerte y vuelca las sombrillas del paseo",
    "la primera helada estropeó las flores del almendro",
    "bajo el toldo la fruta brilla después de la lluvia",
];

pub const RU: &[&str] = &[
    "зимой снег тихо падает на крыши старого города",
    "трамвай скрипит на повороте возле замёрзшей реки",
    "в переулке пахнет дымом и свежим хлебом",
    "фонари загораются рано в декабрьских сумерках",
    "дети лепят снеговика во дворе возле школы",
    "мороз рисует узоры на окнах старого дома",
    "дворник посыпает песком скользкие ступени у подъезда",
    "в парке скрипят качели под тяжестью снега",
    "бабушка несёт авоську с мандаринами через площадь",
    "лёд на реке трещит в самые холодные ночи",
    "прохожие прячут лица от колючего северного ветра",
    "в булочной тепло и пахнет ванилью",
    "метель замела дорожки в старом саду",
    "кошка греется на батарее у кухонного окна",
    "каток на площади открывается в первую субботу декабря",
    "сосульки висят над входом в книжный магазин",
    "почтальон оставляет газеты в промёрзшем ящике",
    "самовар шумит на столе под жёлтым абажуром",
    "снегири клюют рябину в застывшем дворе",
    "поезд метро выныривает на мост над рекой",
    "валенки сохнут у печки в деревенском доме",
    "вьюга воет в трубах всю длинную ночь",
    "утром город просыпается под скрип лопат",
    "в музее тихо и пахнет старым паркетом",
    "ёлка на площади сверкает разноцветными огнями",
    "шапки прохожих белеют от падающего снега",
    "чай с малиной согревает после долгой прогулки",
    "лыжники уходят в лес по свежей лыжне",
    "голуби жмутся к тёплым карнизам вокзала",
    "февральское солнце блестит на сугробах во дворах",
    "старик кормит синиц семечками с ладони",
    "окна домов светятся жёлтым в синих сумерках",
    "мост через реку покрыт инеем до самых перил",
    "в подъезде пахнет ёлкой и мандаринами",
    "снегопад укрывает машины белыми шапками",
    "колокол звонит глухо сквозь падающий снег",
    "печка трещит берёзовыми дровами в сторожке",
    "хоккеисты гоняют шайбу на залитом катке",
    "оттепель съедает снег на южной стороне улицы",
    "варежки сушатся на батарее после снежной битвы",
    "ночной трамвай везёт последних пассажиров в депо",
    "иней серебрит провода над тихой улицей",
    "весна приходит в город со звоном капели",
    "дворы тонут в сугробах после долгой метели",
];

pub const BG: &[&str] = &[
    "морето е спокойно рано сутрин преди да дойдат рибарите",
    "планината се вижда от пристанището в ясните дни",
    "децата събират мидени черупки по топлия пясък",
    "вълните се разбиват в скалите под стария фар",
    "рибарите изтеглят мрежите си при изгрев слънце",
    "пътеката към хижата минава през букова гора",
    "чайките кръжат над лодките край вълнолома",
    "на пазара продават прясна риба и зехтин",
    "вятърът довява мирис на сол и водорасли",
    "посрещаме изгрева на брега с топъл чай",
    "старият капитан разказва истории за далечни пристанища",
    "снегът по върховете се топи чак през юни",
    "лодките се поклащат тихо на котва в залива",
    "туристите изкачват върха по стръмната пътека",
    "фарът мига бавно срещу тъмното море",
    "хижарят пали печката преди да дойдат планинарите",
    "делфини следват ферибота чак до носа",
    "мъглата се спуска бързо над крайбрежния път",
    "под чешмата пълним манерките със студена вода",
    "бурята изхвърли водорасли по целия плаж",
    "еделвайсът расте високо по скалните поляни",
    "котвата потъва бавно в зеленикавата вода",
    "по залез небето над залива става златно",
    "планинската река бълбука под дървения мост",
    "солта блести по камъните след прибоя",
    "рибарското селце мирише на катран и мрежи",
    "орелът кръжи високо над каменистото било",
    "печем риба на жар до самия бряг",
    "есента багри гората над хижата в червено",
    "вълнението люлее малките лодки край кея",
    "изворът извира студен изпод сивите скали",
    "децата пускат хвърчила по широкия плаж",
    "планинарите тръгват преди зазоряване към върха",
    "мидите се пекат върху ламарина на огъня",
    "козите пасат по стръмните поляни над селото",
    "прибоят шуми цяла нощ под прозорците",
    "гроздето зрее по склоновете над залива",
    "снежната пряспа се задържа в дола до пролетта",
    "пристанището свети тихо в лятната нощ",
    "смокините узряват до каменната ограда на двора",
    "звънците на стадото се чуват по билото",
    "мъжете насмоляват лодката преди новия сезон",
    "щъркелите отлитат на юг в края на август",
    "вятърът свири в такелажа на платноходките",
];

pub const EL: &[&str] = &[
    "το νησί έχει ένα μικρό λιμάνι με άσπρα σπίτια",
    "οι ψαράδες δένουν τις βάρκες πριν από τη δύση",
    "ο αρχαίος ναός στέκει ψηλά πάνω από τη θάλασσα",
    "τα παιδιά κολυμπούν στα ρηχά νερά του κόλπου",
    "η γιαγιά ψήνει ψωμί στον πέτρινο φούρνο",
    "το μελτέμι σηκώνει κύματα στο ανοιχτό πέλαγος",
    "οι ελιές γεμίζουν τα κοφίνια τον νοέμβριο",
    "ο ήλιος βάφει κόκκινα τα σοκάκια το απόγευμα",
    "στο μουσείο φυλάγονται αγγεία από την ανασκαφή",
    "το καΐκι φέρνει προμήθειες από το μεγάλο νησί",
    "βάφουν την εκκλησία άσπρη κάθε άνοιξη πριν από το πάσχα",
    "τα κύματα σκάνε στον μώλο του παλιού λιμανιού",
    "ο βοσκός οδηγεί τα πρόβατα στις πλαγιές με θυμάρι",
    "τα δίχτυα στεγνώνουν απλωμένα στον ήλιο",
    "το φεγγάρι στρώνει ασημένιο δρόμο στο νερό",
    "οι τουρίστες ανεβαίνουν τα σκαλιά προς το κάστρο",
    "η πλατεία γεμίζει κόσμο μετά τον εσπερινό",
    "το πηγάδι της αυλής κρατά δροσερό νερό",
    "οι αμυγδαλιές ανθίζουν νωρίς τον φεβρουάριο",
    "ο καπετάνιος διαβάζει τον καιρό από τα σύννεφα",
    "στα στενά μυρίζει γιασεμί και θαλασσινό αέρα",
    "τα αρχαία θέατρα γεμίζουν ξανά τις καλοκαιρινές νύχτες",
    "η βάρκα γλιστρά αθόρυβα μέσα στο λιμανάκι",
    "ο μύλος με τα άσπρα πανιά στέκει στον λόφο",
    "τα παιδιά μαζεύουν βότσαλα για τον πύργο τους",
    "το τυρί ωριμάζει σε δροσερές σπηλιές του βουνού",
    "οι καμπάνες χτυπούν χαρούμενα το πρωί της γιορτής",
    "το μονοπάτι κατεβαίνει απότομα προς την αμμουδιά",
    "οι σφουγγαράδες έλεγαν ιστορίες για βαθιά νερά",
    "η αυλή μοσχοβολά βασιλικό τα βράδια του ιουλίου",
    "τα δελφίνια παίζουν μπροστά από την πλώρη",
    "ο πηλός γίνεται στάμνα στα χέρια του τεχνίτη",
    "το ηλιοβασίλεμα χρυσώνει τα τείχη του κάστρου",
    "οι μέλισσες δουλεύουν στα θυμάρια της πλαγιάς",
    "η θάλασσα ησυχάζει μετά το μελτέμι της νύχτας",
    "στο καφενείο παίζουν τάβλι κάτω από το πλατάνι",
    "τα σταφύλια λιάζονται στις ταράτσες τον αύγουστο",
    "ο φάρος αναβοσβήνει σταθερά στην άκρη του κάβου",
    "η ανασκαφή έφερε στο φως ένα ψηφιδωτό δάπεδο",
    "τα γαϊδουράκια ανεβάζουν πραμάτεια στα σοκάκια",
    "το αλάτι στεγνώνει στις αλυκές δίπλα στον κόλπο",
    "οι γλάροι ακολουθούν το καΐκι ως το ξημέρωμα",
    "η βροχή του χειμώνα γεμίζει τις στέρνες του χωριού",
    "τα φώτα του λιμανιού τρεμοπαίζουν στο σκοτεινό νερό",
];

pub const AR: &[&str] = &[
    "تجري الأنهار من الجبال نحو المدينة القديمة كل ربيع",
    "تشرق الشمس فوق كثبان الرمل الذهبية عند الفجر",
    "يبيع التجار التوابل والزيتون في السوق العتيق",
    "تستريح القوافل عند الواحة قبل عبور الصحراء",
    "يرتفع صوت المؤذن فوق أسطح الحي القديم",
    "تفوح رائحة الخبز الطازج من الفرن الحجري",
    "يجلس الصيادون على ضفة النهر قبل الغروب",
    "تحمل الرياح رمال الصحراء إلى أطراف المدينة",
    "يسقي الفلاح حقول القمح من الساقية القديمة",
    "تزدحم الأزقة بالباعة في ليالي رمضان",
    "يروي الجد حكايات البحر لأحفاده كل مساء",
    "تلمع النجوم فوق الخيمة في ليل الصحراء البارد",
    "يطرز الحرفي السجاد بألوان الغروب الدافئة",
    "تمتلئ الجرار بالماء العذب من البئر العميق",
    "يعبر الجسر الحجري النهر عند البوابة الشرقية",
    "تظلل أشجار النخيل ساحة السوق في الظهيرة",
    "يفرش البائع بضاعته تحت القوس الحجري",
    "تهب نسائم المساء من جهة النهر الهادئ",
    "يحصد الفلاحون التمر في أواخر الصيف",
    "تضيء الفوانيس الأزقة الضيقة بعد العشاء",
    "يستقبل الميناء سفن التجار من البلدان البعيدة",
    "تنساب المياه في السواقي بين البساتين الخضراء",
    "يصعد الرعاة بالأغنام إلى المراعي الجبلية",
    "تختبئ الحارات القديمة خلف الأسوار العالية",
    "تطحن الرحى حب القمح في بيت الطاحون",
    "ترسو القوارب الخشبية عند المرفأ الصغير",
    "يملأ عبق القهوة المحمصة أروقة السوق",
    "تحرس القلعة القديمة مدخل الوادي الأخضر",
    "تعبر أسراب الكركي سماء الدلتا في الخريف",
    "تستيقظ المدينة على أصوات الباعة المتجولين",
    "ينسج الصانع سلالا من سعف النخيل",
    "تروي الأمهات للأطفال قصص الجدات قبل النوم",
    "يقطع المسافرون الوادي قبل اشتداد الحر",
    "تزين الزخارف الجصية جدران البيت الدمشقي",
    "يعود الصيادون بالشباك المليئة عند الأصيل",
    "تفيض ضفاف النهر بعد ذوبان ثلوج الجبال",
    "يشرب المسافر الشاي بالنعناع في خان الطريق",
    "تتفتح أزهار البرتقال في بساتين الضفة الغربية",
    "يرمم البناؤون السور القديم بالحجر الرملي",
    "تسري حكايات السوق من دكان إلى دكان",
    "يغزل النساجون الصوف في ظل العريشة",
    "تنعكس المآذن على صفحة النهر الساكن",
    "يجفف المزارعون المشمش فوق أسطح البيوت",
    "تعود القطعان إلى الحظائر قبل هبوط الليل",
];

/// (tag, seed pool) for every synthetic language, sorted by tag.
pub const ALL: &[(&str, &[&str])] = &[
    ("ar", AR),
    ("bg", BG),
    ("de", DE),
    ("el", EL),
    ("en", EN),
    ("es", ES),
    ("fr", FR),
    ("ru", RU),
];
