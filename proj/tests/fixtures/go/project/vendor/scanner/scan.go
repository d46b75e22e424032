package scanner

func Run() {
	if EnableShardScanner {
		scan()
	}
}
