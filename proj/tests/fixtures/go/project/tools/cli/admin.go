package cli

const usage = `EnableShardScanner turns on the scanner`
