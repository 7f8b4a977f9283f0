x = eval(input())
s = [x, x + 1, x + 1]
s[0] = s[1] + s[2]
print(s)
print(s[0] + s[1] + s[2])
print(-s[0])
print(s[1] == x + 1)
