n = {0: 2, 1: 7, 2: 7}
k = eval(input())
n[k] = n[k] + 1
print(n[0] + n[1] + n[2])
print(n)
print(n[k] if n[k] != 1 else -1)
