// Copyright 2026 The bitext Authors
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

#pragma once

// Bundled seed prose for the character n-gram language profiles. Two
// registers per language: everyday prose and software-UI strings. The
// profiles built from these are a stand-in that can be replaced by
// user-supplied seed files at runtime.

namespace bitext::seeds {

inline constexpr const char* kEnglish =
    "the quick brown fox jumps over the lazy dog. we went to the market on "
    "saturday morning and bought fresh bread, cheese and apples. the weather "
    "has been cold this week, but the children still play outside every "
    "afternoon. please read the instructions carefully before you start the "
    "machine. this software is distributed in the hope that it will be "
    "useful, but without any warranty. the history of the city goes back "
    "more than eight hundred years. she said that the meeting would start at "
    "nine and that everyone should bring the report. there is nothing better "
    "than a good book and a cup of tea in the evening. the government "
    "announced new measures to support small companies during the crisis. "
    "click the button to open the settings window. the file could not be "
    "saved because the disk is full. choose a different name for the new "
    "folder. the printer is not connected to the computer. you can change "
    "the language of the user interface in the options menu. press any key "
    "to continue. the document contains unsaved changes. do you really want "
    "to delete the selected items? the search returned no results. an "
    "unknown error occurred while loading the page.";

inline constexpr const char* kGerman =
    "der schnelle braune fuchs springt über den faulen hund. wir sind am "
    "samstagmorgen auf den markt gegangen und haben frisches brot, käse und "
    "äpfel gekauft. das wetter war diese woche kalt, aber die kinder spielen "
    "trotzdem jeden nachmittag draußen. bitte lesen sie die anleitung "
    "sorgfältig, bevor sie die maschine starten. diese software wird in der "
    "hoffnung verbreitet, dass sie nützlich ist, jedoch ohne jede "
    "gewährleistung. die geschichte der stadt reicht mehr als achthundert "
    "jahre zurück. sie sagte, dass die besprechung um neun uhr beginnt und "
    "dass alle den bericht mitbringen sollen. es gibt nichts besseres als "
    "ein gutes buch und eine tasse tee am abend. die regierung kündigte neue "
    "maßnahmen zur unterstützung kleiner unternehmen während der krise an. "
    "klicken sie auf die schaltfläche, um das einstellungsfenster zu öffnen. "
    "die datei konnte nicht gespeichert werden, weil die festplatte voll "
    "ist. wählen sie einen anderen namen für den neuen ordner. der drucker "
    "ist nicht mit dem computer verbunden. sie können die sprache der "
    "benutzeroberfläche im menü optionen ändern. drücken sie eine beliebige "
    "taste, um fortzufahren. das dokument enthält ungespeicherte änderungen. "
    "möchten sie die ausgewählten einträge wirklich löschen? die suche ergab "
    "keine treffer. beim laden der seite ist ein unbekannter fehler "
    "aufgetreten.";

inline constexpr const char* kFrench =
    "le renard brun et rapide saute par-dessus le chien paresseux. nous "
    "sommes allés au marché samedi matin et nous avons acheté du pain frais, "
    "du fromage et des pommes. le temps a été froid cette semaine, mais les "
    "enfants jouent quand même dehors chaque après-midi. veuillez lire "
    "attentivement les instructions avant de démarrer la machine. ce "
    "logiciel est distribué dans l'espoir qu'il sera utile, mais sans aucune "
    "garantie. l'histoire de la ville remonte à plus de huit cents ans. elle "
    "a dit que la réunion commencerait à neuf heures et que chacun devrait "
    "apporter le rapport. il n'y a rien de mieux qu'un bon livre et une "
    "tasse de thé le soir. le gouvernement a annoncé de nouvelles mesures "
    "pour soutenir les petites entreprises pendant la crise. cliquez sur le "
    "bouton pour ouvrir la fenêtre des paramètres. le fichier n'a pas pu "
    "être enregistré parce que le disque est plein. choisissez un autre nom "
    "pour le nouveau dossier. l'imprimante n'est pas connectée à "
    "l'ordinateur. vous pouvez changer la langue de l'interface dans le menu "
    "des options. appuyez sur une touche pour continuer. le document "
    "contient des modifications non enregistrées. voulez-vous vraiment "
    "supprimer les éléments sélectionnés ? la recherche n'a donné aucun "
    "résultat. une erreur inconnue s'est produite lors du chargement de la "
    "page.";

inline constexpr const char* kSpanish =
    "el zorro marrón y rápido salta sobre el perro perezoso. fuimos al "
    "mercado el sábado por la mañana y compramos pan fresco, queso y "
    "manzanas. el tiempo ha sido frío esta semana, pero los niños siguen "
    "jugando afuera todas las tardes. por favor, lea las instrucciones con "
    "atención antes de poner en marcha la máquina. este programa se "
    "distribuye con la esperanza de que sea útil, pero sin ninguna garantía. "
    "la historia de la ciudad se remonta a más de ochocientos años. ella "
    "dijo que la reunión empezaría a las nueve y que todos deberían traer el "
    "informe. no hay nada mejor que un buen libro y una taza de té por la "
    "noche. el gobierno anunció nuevas medidas para apoyar a las pequeñas "
    "empresas durante la crisis. haga clic en el botón para abrir la "
    "ventana de configuración. el archivo no se pudo guardar porque el disco "
    "está lleno. elija otro nombre para la carpeta nueva. la impresora no "
    "está conectada al ordenador. puede cambiar el idioma de la interfaz en "
    "el menú de opciones. pulse cualquier tecla para continuar. el documento "
    "contiene cambios sin guardar. ¿realmente desea eliminar los elementos "
    "seleccionados? la búsqueda no devolvió resultados. se produjo un error "
    "desconocido al cargar la página.";

inline constexpr const char* kItalian =
    "la volpe marrone e veloce salta sopra il cane pigro. siamo andati al "
    "mercato sabato mattina e abbiamo comprato pane fresco, formaggio e "
    "mele. il tempo è stato freddo questa settimana, ma i bambini giocano "
    "comunque fuori ogni pomeriggio. si prega di leggere attentamente le "
    "istruzioni prima di avviare la macchina. questo programma è distribuito "
    "nella speranza che sia utile, ma senza alcuna garanzia. la storia della "
    "città risale a più di ottocento anni fa. ha detto che la riunione "
    "sarebbe iniziata alle nove e che tutti avrebbero dovuto portare il "
    "rapporto. non c'è niente di meglio di un buon libro e una tazza di tè "
    "la sera. il governo ha annunciato nuove misure per sostenere le piccole "
    "imprese durante la crisi. fare clic sul pulsante per aprire la finestra "
    "delle impostazioni. impossibile salvare il file perché il disco è "
    "pieno. scegliere un altro nome per la nuova cartella. la stampante non "
    "è collegata al computer. è possibile cambiare la lingua dell'interfaccia "
    "nel menu delle opzioni. premere un tasto qualsiasi per continuare. il "
    "documento contiene modifiche non salvate. eliminare davvero gli "
    "elementi selezionati? la ricerca non ha restituito risultati. si è "
    "verificato un errore sconosciuto durante il caricamento della pagina.";

inline constexpr const char* kPortuguese =
    "a raposa castanha e rápida salta sobre o cão preguiçoso. fomos ao "
    "mercado no sábado de manhã e comprámos pão fresco, queijo e maçãs. o "
    "tempo tem estado frio esta semana, mas as crianças continuam a brincar "
    "lá fora todas as tardes. por favor, leia as instruções com atenção "
    "antes de ligar a máquina. este programa é distribuído na esperança de "
    "que seja útil, mas sem qualquer garantia. a história da cidade remonta "
    "a mais de oitocentos anos. ela disse que a reunião começaria às nove e "
    "que todos deveriam trazer o relatório. não há nada melhor do que um bom "
    "livro e uma chávena de chá à noite. o governo anunciou novas medidas "
    "para apoiar as pequenas empresas durante a crise. clique no botão para "
    "abrir a janela de configurações. não foi possível guardar o ficheiro "
    "porque o disco está cheio. escolha outro nome para a nova pasta. a "
    "impressora não está ligada ao computador. pode alterar o idioma da "
    "interface no menu de opções. prima qualquer tecla para continuar. o "
    "documento contém alterações não guardadas. deseja realmente eliminar os "
    "itens selecionados? a pesquisa não devolveu resultados. ocorreu um erro "
    "desconhecido ao carregar a página.";

inline constexpr const char* kDutch =
    "de snelle bruine vos springt over de luie hond. we zijn zaterdagochtend "
    "naar de markt gegaan en hebben vers brood, kaas en appels gekocht. het "
    "weer was deze week koud, maar de kinderen spelen toch elke middag "
    "buiten. lees de instructies zorgvuldig voordat u de machine start. deze "
    "software wordt verspreid in de hoop dat zij nuttig zal zijn, maar "
    "zonder enige garantie. de geschiedenis van de stad gaat meer dan "
    "achthonderd jaar terug. ze zei dat de vergadering om negen uur zou "
    "beginnen en dat iedereen het verslag moest meenemen. er is niets beters "
    "dan een goed boek en een kop thee in de avond. de regering kondigde "
    "nieuwe maatregelen aan om kleine bedrijven tijdens de crisis te "
    "steunen. klik op de knop om het instellingenvenster te openen. het "
    "bestand kon niet worden opgeslagen omdat de schijf vol is. kies een "
    "andere naam voor de nieuwe map. de printer is niet met de computer "
    "verbonden. u kunt de taal van de interface wijzigen in het menu opties. "
    "druk op een willekeurige toets om door te gaan. het document bevat "
    "niet-opgeslagen wijzigingen. wilt u de geselecteerde items echt "
    "verwijderen? de zoekopdracht leverde geen resultaten op. er is een "
    "onbekende fout opgetreden bij het laden van de pagina.";

inline constexpr const char* kRussian =
    "быстрая коричневая лиса прыгает через ленивую собаку. в субботу утром "
    "мы пошли на рынок и купили свежий хлеб, сыр и яблоки. погода на этой "
    "неделе была холодной, но дети всё равно играют на улице каждый день. "
    "пожалуйста, внимательно прочитайте инструкцию, прежде чем запускать "
    "машину. эта программа распространяется в надежде, что она будет "
    "полезной, но без каких-либо гарантий. история города насчитывает более "
    "восьмисот лет. она сказала, что собрание начнётся в девять часов и что "
    "все должны принести отчёт. нет ничего лучше хорошей книги и чашки чая "
    "вечером. правительство объявило о новых мерах поддержки малых "
    "предприятий во время кризиса. нажмите кнопку, чтобы открыть окно "
    "настроек. файл не удалось сохранить, потому что диск заполнен. "
    "выберите другое имя для новой папки. принтер не подключён к компьютеру. "
    "вы можете изменить язык интерфейса в меню параметров. нажмите любую "
    "клавишу, чтобы продолжить. документ содержит несохранённые изменения. "
    "вы действительно хотите удалить выбранные элементы? поиск не дал "
    "результатов. при загрузке страницы произошла неизвестная ошибка.";

inline constexpr const char* kGreek =
    "η γρήγορη καφέ αλεπού πηδά πάνω από το τεμπέλικο σκυλί. το σάββατο το "
    "πρωί πήγαμε στην αγορά και αγοράσαμε φρέσκο ψωμί, τυρί και μήλα. ο "
    "καιρός ήταν κρύος αυτή την εβδομάδα, αλλά τα παιδιά παίζουν έξω κάθε "
    "απόγευμα. παρακαλώ διαβάστε προσεκτικά τις οδηγίες πριν ξεκινήσετε το "
    "μηχάνημα. η ιστορία της πόλης πηγαίνει πίσω περισσότερα από οκτακόσια "
    "χρόνια. είπε ότι η συνάντηση θα αρχίσει στις εννέα και ότι όλοι πρέπει "
    "να φέρουν την αναφορά. δεν υπάρχει τίποτα καλύτερο από ένα καλό βιβλίο "
    "και ένα φλιτζάνι τσάι το βράδυ. η κυβέρνηση ανακοίνωσε νέα μέτρα για τη "
    "στήριξη των μικρών επιχειρήσεων κατά τη διάρκεια της κρίσης. κάντε κλικ "
    "στο κουμπί για να ανοίξετε το παράθυρο ρυθμίσεων. το αρχείο δεν ήταν "
    "δυνατό να αποθηκευτεί επειδή ο δίσκος είναι γεμάτος. επιλέξτε άλλο "
    "όνομα για τον νέο φάκελο. ο εκτυπωτής δεν είναι συνδεδεμένος με τον "
    "υπολογιστή. μπορείτε να αλλάξετε τη γλώσσα της διεπαφής στο μενού "
    "επιλογών. πατήστε οποιοδήποτε πλήκτρο για να συνεχίσετε. το έγγραφο "
    "περιέχει μη αποθηκευμένες αλλαγές. θέλετε πραγματικά να διαγράψετε τα "
    "επιλεγμένα στοιχεία; η αναζήτηση δεν επέστρεψε αποτελέσματα. "
    "παρουσιάστηκε άγνωστο σφάλμα κατά τη φόρτωση της σελίδας.";

struct Seed {
  const char* lang;
  const char* text;
};

inline constexpr Seed kAll[] = {
    {"en", kEnglish}, {"de", kGerman},  {"fr", kFrench},
    {"es", kSpanish}, {"it", kItalian}, {"pt", kPortuguese},
    {"nl", kDutch},   {"ru", kRussian}, {"el", kGreek},
};

}  // namespace bitext::seeds
